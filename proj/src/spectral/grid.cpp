// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/spectral/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lowmach/error.hpp"

namespace lowmach
{

SpectralGrid::SpectralGrid(int dim, std::array<int, 3> points, std::array<double, 3> length)
  : dim_(dim), n_(points), len_(length)
{
  if (dim < 1 || dim > 3)
    throw InvalidInput("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
  for (int a = 0; a < 3; a++)
  {
    if (a >= dim)
    {
      n_[a] = 1;
      len_[a] = 1.0;
      continue;
    }
    if (n_[a] < 2 || n_[a] % 2 != 0)
      throw InvalidInput("grid points must be even and positive on axis " + std::to_string(a));
    if (!(len_[a] > 0.0) || !std::isfinite(len_[a]))
      throw InvalidInput("box length must be positive on axis " + std::to_string(a));
  }
  size_ = static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  auto hs = half_shape();
  half_size_ = static_cast<std::size_t>(hs[0]) * hs[1] * hs[2];
}

SpectralGrid SpectralGrid::cube(int dim, int n, double length)
{
  return SpectralGrid(dim, {n, n, n}, {length, length, length});
}

std::array<int, 3> SpectralGrid::half_shape() const
{
  auto hs = n_;
  hs[dim_ - 1] = n_[dim_ - 1] / 2 + 1;
  return hs;
}

double SpectralGrid::volume() const
{
  double v = 1.0;
  for (int a = 0; a < dim_; a++)
    v *= len_[a];
  return v;
}

double SpectralGrid::min_spacing() const
{
  double h = spacing(0);
  for (int a = 1; a < dim_; a++)
    h = std::min(h, spacing(a));
  return h;
}

double SpectralGrid::fundamental(int axis) const
{
  return 2.0 * std::numbers::pi / len_[axis];
}

double SpectralGrid::wavenumber(int axis, int i) const
{
  return fundamental(axis) * lattice_index(axis, i);
}

double SpectralGrid::max_wavenumber() const
{
  double s = 0.0;
  for (int a = 0; a < dim_; a++)
  {
    double k = std::numbers::pi * n_[a] / len_[a];
    s += k * k;
  }
  return std::sqrt(s);
}

double SpectralGrid::axis_cutoff() const
{
  double k = std::numbers::pi * n_[0] / len_[0];
  for (int a = 1; a < dim_; a++)
    k = std::min(k, std::numbers::pi * n_[a] / len_[a]);
  return k;
}

}  // namespace lowmach
