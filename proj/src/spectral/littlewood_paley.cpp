// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/spectral/littlewood_paley.hpp"

#include "lowmach/spectral/multiplier.hpp"

namespace lowmach
{

namespace
{

double bump_f(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double smooth_step(double x)
{
  if (x <= 0.0)
    return 0.0;
  if (x >= 1.0)
    return 1.0;
  const double a = bump_f(x), b = bump_f(1.0 - x);
  return a / (a + b);
}

void scale_modes(Spectrum &s, const std::function<double(double)> &w)
{
  const auto &g = s.grid();
  for_each_mode(g, s.layout(), [&](std::size_t i, const Wavevector &xi, bool) {
    const double m = w(std::sqrt(norm2(xi)));
    for (int c = 0; c < s.components(); c++)
      s(c, i) *= m;
  });
}

template <typename T>
LPResult<T> project_impl(const Field<T> &f, FrequencyShell shell)
{
  LPResult<T> r;
  r.empty = shell_is_empty(f.grid(), shell);
  if (r.empty)
  {
    r.field = Field<T>(f.grid(), f.components());
    return r;
  }
  Spectrum s = forward(f);
  lp_shell_inplace(s, shell);
  if constexpr (std::is_same_v<T, double>)
    r.field = inverse_real(s);
  else
    r.field = inverse_complex(s);
  return r;
}

template <typename T>
Field<T> lowpass_impl(const Field<T> &f, double cutoff)
{
  if (!(cutoff > 0.0))
    throw InvalidInput("lp_lowpass: cutoff must be positive");
  Spectrum s = forward(f);
  lp_low_inplace(s, cutoff);
  if constexpr (std::is_same_v<T, double>)
    return inverse_real(s);
  else
    return inverse_complex(s);
}

}  // namespace

double lp_psi(double r) { return smooth_step(2.0 - r); }

double lp_phi(double r) { return lp_psi(r) - lp_psi(2.0 * r); }

void lp_shell_inplace(Spectrum &s, FrequencyShell shell)
{
  const double scale = std::ldexp(1.0, -shell.j);
  scale_modes(s, [scale](double k) { return lp_phi(k * scale); });
}

void lp_low_inplace(Spectrum &s, double cutoff)
{
  scale_modes(s, [cutoff](double k) { return lp_psi(k / cutoff); });
}

bool shell_is_empty(const SpectralGrid &g, FrequencyShell shell)
{
  const double lo = shell.lower(), hi = shell.upper();
  bool found = false;
  for_each_mode(g, Layout::Half, [&](std::size_t, const Wavevector &xi, bool) {
    const double k = std::sqrt(norm2(xi));
    if (k > lo && k < hi)
      found = true;
  });
  return !found;
}

int lp_top_shell(const SpectralGrid &g)
{
  return std::max(0, static_cast<int>(std::ceil(std::log2(g.max_wavenumber()))));
}

LPResult<double> lp_project(const RealField &f, FrequencyShell shell) { return project_impl(f, shell); }
LPResult<cplx> lp_project(const ComplexField &f, FrequencyShell shell) { return project_impl(f, shell); }
RealField lp_lowpass(const RealField &f, double cutoff) { return lowpass_impl(f, cutoff); }
ComplexField lp_lowpass(const ComplexField &f, double cutoff) { return lowpass_impl(f, cutoff); }

}  // namespace lowmach
