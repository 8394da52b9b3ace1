// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_SPECTRAL_SPECTRUM_HPP
#define LOWMACH_SPECTRAL_SPECTRUM_HPP

#include <cmath>
#include <span>
#include <vector>

#include "lowmach/spectral/field.hpp"

namespace lowmach
{

enum class Layout
{
  Half,  // r2c layout, spectra of real fields
  Full   // all modes, spectra of complex fields
};

//
// Fourier coefficients c_k normalized so that f(x) = sum_k c_k exp(i xi_k . x).
//
class Spectrum
{
public:
  Spectrum() = default;
  Spectrum(const SpectralGrid &grid, int components, Layout layout);

  const SpectralGrid &grid() const { return grid_; }
  int components() const { return components_; }
  Layout layout() const { return layout_; }
  std::size_t modes() const { return modes_; }

  std::span<cplx> component(int c) { return {values_.data() + c * modes_, modes_}; }
  std::span<const cplx> component(int c) const { return {values_.data() + c * modes_, modes_}; }
  cplx &operator()(int c, std::size_t i) { return values_[c * modes_ + i]; }
  const cplx &operator()(int c, std::size_t i) const { return values_[c * modes_ + i]; }
  std::vector<cplx> &values() { return values_; }
  const std::vector<cplx> &values() const { return values_; }

  Spectrum &operator+=(const Spectrum &o);
  Spectrum &operator-=(const Spectrum &o);
  Spectrum &operator*=(cplx a);
  Spectrum &axpy(cplx a, const Spectrum &o);
  void check_same(const Spectrum &o) const;

private:
  SpectralGrid grid_;
  int components_ = 1;
  Layout layout_ = Layout::Half;
  std::size_t modes_ = 0;
  std::vector<cplx> values_;
};

Spectrum forward(const RealField &f);
Spectrum forward(const ComplexField &f);
RealField inverse_real(const Spectrum &s);
ComplexField inverse_complex(const Spectrum &s);

// Per-axis wavenumbers for a layout, plus Nyquist flags.
struct AxisTable
{
  std::array<std::vector<double>, 3> k;
  std::array<std::vector<char>, 3> nyquist;
  std::array<int, 3> extent;
};
AxisTable axis_table(const SpectralGrid &g, Layout layout);

//
// Visits every mode as fn(index, xi, nyquist). nyquist is true when some axis sits at
// storage index N/2, where the lattice value -N/2 stands for both signs.
//
template <typename Fn>
void for_each_mode(const SpectralGrid &g, Layout layout, Fn &&fn)
{
  const AxisTable t = axis_table(g, layout);
  std::size_t idx = 0;
  Wavevector xi = {0.0, 0.0, 0.0};
  for (int i = 0; i < t.extent[0]; i++)
  {
    xi[0] = t.k[0][i];
    for (int j = 0; j < t.extent[1]; j++)
    {
      xi[1] = t.k[1][j];
      for (int l = 0; l < t.extent[2]; l++, idx++)
      {
        xi[2] = t.k[2][l];
        fn(idx, static_cast<const Wavevector &>(xi),
           bool(t.nyquist[0][i] | t.nyquist[1][j] | t.nyquist[2][l]));
      }
    }
  }
}

// Number of modes a Half-layout entry stands for (1 or 2) given its last-axis index.
inline double half_multiplicity(const SpectralGrid &g, int last_index)
{
  int n = g.points(g.dim() - 1);
  return (last_index == 0 || last_index == n / 2) ? 1.0 : 2.0;
}

// Sum over modes of w(xi) |c_k|^2 counting every mode of the full lattice once.
template <typename Wt>
double weighted_power(const Spectrum &s, int c, Wt &&w)
{
  double acc = 0.0;
  const auto v = s.component(c);
  if (s.layout() == Layout::Full)
  {
    for_each_mode(s.grid(), Layout::Full,
                  [&](std::size_t i, const Wavevector &xi, bool) { acc += w(xi) * std::norm(v[i]); });
    return acc;
  }
  const int hp = s.grid().half_points();
  for_each_mode(s.grid(), Layout::Half, [&](std::size_t i, const Wavevector &xi, bool) {
    acc += half_multiplicity(s.grid(), static_cast<int>(i % hp)) * w(xi) * std::norm(v[i]);
  });
  return acc;
}

inline double norm2(const Wavevector &xi)
{
  return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
}

}  // namespace lowmach

#endif  // LOWMACH_SPECTRAL_SPECTRUM_HPP
