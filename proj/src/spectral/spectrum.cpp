// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/spectral/spectrum.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace lowmach
{

namespace
{

// FFTW_ESTIMATE keeps plan choice (and therefore rounding) reproducible run to run.
constexpr unsigned kPlanFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

struct PlanSet
{
  fftw_plan r2c = nullptr, c2r = nullptr, fwd = nullptr, bwd = nullptr;
  ~PlanSet()
  {
    for (auto p : {r2c, c2r, fwd, bwd})
      if (p)
        fftw_destroy_plan(p);
  }
};

// Planning is not thread-safe in FFTW; executing an existing plan on new arrays is.
std::mutex &plan_mutex()
{
  static std::mutex m;
  return m;
}

const PlanSet &plans_for(const SpectralGrid &g)
{
  static std::map<std::array<int, 4>, std::unique_ptr<PlanSet>> cache;
  std::array<int, 4> key = {g.dim(), g.points(0), g.points(1), g.points(2)};
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = cache.find(key);
  if (it != cache.end())
    return *it->second;

  auto ps = std::make_unique<PlanSet>();
  const int d = g.dim();
  int n[3] = {g.points(0), g.points(1), g.points(2)};
  std::vector<double> r(g.size());
  std::vector<cplx> h(g.half_size()), f(g.size()), f2(g.size());
  auto *hc = reinterpret_cast<fftw_complex *>(h.data());
  auto *fc = reinterpret_cast<fftw_complex *>(f.data());
  auto *fc2 = reinterpret_cast<fftw_complex *>(f2.data());
  ps->r2c = fftw_plan_dft_r2c(d, n, r.data(), hc, kPlanFlags);
  ps->c2r = fftw_plan_dft_c2r(d, n, hc, r.data(), kPlanFlags);
  ps->fwd = fftw_plan_dft(d, n, fc, fc2, FFTW_FORWARD, kPlanFlags);
  ps->bwd = fftw_plan_dft(d, n, fc, fc2, FFTW_BACKWARD, kPlanFlags);
  auto &ref = *ps;
  cache.emplace(key, std::move(ps));
  return ref;
}

}  // namespace

Spectrum::Spectrum(const SpectralGrid &grid, int components, Layout layout)
  : grid_(grid), components_(components), layout_(layout),
    modes_(layout == Layout::Half ? grid.half_size() : grid.size()),
    values_(modes_ * components)
{
}

void Spectrum::check_same(const Spectrum &o) const
{
  if (o.grid_ != grid_ || o.components_ != components_ || o.layout_ != layout_)
    throw InvalidInput("spectrum shape mismatch");
}

Spectrum &Spectrum::operator+=(const Spectrum &o)
{
  check_same(o);
  for (std::size_t i = 0; i < values_.size(); i++)
    values_[i] += o.values_[i];
  return *this;
}

Spectrum &Spectrum::operator-=(const Spectrum &o)
{
  check_same(o);
  for (std::size_t i = 0; i < values_.size(); i++)
    values_[i] -= o.values_[i];
  return *this;
}

Spectrum &Spectrum::operator*=(cplx a)
{
  for (auto &v : values_)
    v *= a;
  return *this;
}

Spectrum &Spectrum::axpy(cplx a, const Spectrum &o)
{
  check_same(o);
  for (std::size_t i = 0; i < values_.size(); i++)
    values_[i] += a * o.values_[i];
  return *this;
}

Spectrum forward(const RealField &f)
{
  const auto &g = f.grid();
  const auto &p = plans_for(g);
  Spectrum s(g, f.components(), Layout::Half);
  const double scale = 1.0 / static_cast<double>(g.size());
  for (int c = 0; c < f.components(); c++)
  {
    auto out = s.component(c);
    fftw_execute_dft_r2c(p.r2c, const_cast<double *>(f.component(c).data()),
                         reinterpret_cast<fftw_complex *>(out.data()));
    for (auto &v : out)
      v *= scale;
  }
  return s;
}

Spectrum forward(const ComplexField &f)
{
  const auto &g = f.grid();
  const auto &p = plans_for(g);
  Spectrum s(g, f.components(), Layout::Full);
  const double scale = 1.0 / static_cast<double>(g.size());
  for (int c = 0; c < f.components(); c++)
  {
    auto out = s.component(c);
    fftw_execute_dft(p.fwd, reinterpret_cast<fftw_complex *>(const_cast<cplx *>(f.component(c).data())),
                     reinterpret_cast<fftw_complex *>(out.data()));
    for (auto &v : out)
      v *= scale;
  }
  return s;
}

RealField inverse_real(const Spectrum &s)
{
  if (s.layout() != Layout::Half)
    throw InvalidInput("inverse_real needs a Half-layout spectrum");
  const auto &g = s.grid();
  const auto &p = plans_for(g);
  RealField f(g, s.components());
  std::vector<cplx> scratch(s.modes());
  for (int c = 0; c < s.components(); c++)
  {
    // c2r overwrites its input.
    auto in = s.component(c);
    std::copy(in.begin(), in.end(), scratch.begin());
    fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex *>(scratch.data()), f.component(c).data());
  }
  return f;
}

ComplexField inverse_complex(const Spectrum &s)
{
  if (s.layout() != Layout::Full)
    throw InvalidInput("inverse_complex needs a Full-layout spectrum");
  const auto &g = s.grid();
  const auto &p = plans_for(g);
  ComplexField f(g, s.components());
  for (int c = 0; c < s.components(); c++)
    fftw_execute_dft(p.bwd, reinterpret_cast<fftw_complex *>(const_cast<cplx *>(s.component(c).data())),
                     reinterpret_cast<fftw_complex *>(f.component(c).data()));
  return f;
}

AxisTable axis_table(const SpectralGrid &g, Layout layout)
{
  AxisTable t;
  const auto shape = layout == Layout::Half ? g.half_shape() : g.shape();
  for (int a = 0; a < 3; a++)
  {
    t.extent[a] = shape[a];
    t.k[a].assign(shape[a], 0.0);
    t.nyquist[a].assign(shape[a], 0);
    if (a >= g.dim())
      continue;
    for (int i = 0; i < shape[a]; i++)
    {
      t.k[a][i] = g.wavenumber(a, i);
      t.nyquist[a][i] = (i == g.points(a) / 2) ? 1 : 0;
    }
  }
  return t;
}

ComplexField to_complex(const RealField &f)
{
  ComplexField out(f.grid(), f.components());
  for (std::size_t i = 0; i < f.values().size(); i++)
    out.values()[i] = f.values()[i];
  return out;
}

RealField real_part(const ComplexField &f)
{
  RealField out(f.grid(), f.components());
  for (std::size_t i = 0; i < f.values().size(); i++)
    out.values()[i] = f.values()[i].real();
  return out;
}

RealField imag_part(const ComplexField &f)
{
  RealField out(f.grid(), f.components());
  for (std::size_t i = 0; i < f.values().size(); i++)
    out.values()[i] = f.values()[i].imag();
  return out;
}

}  // namespace lowmach
