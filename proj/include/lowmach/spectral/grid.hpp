// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_SPECTRAL_GRID_HPP
#define LOWMACH_SPECTRAL_GRID_HPP

#include <array>
#include <cstddef>

namespace lowmach
{

using Wavevector = std::array<double, 3>;

//
// Periodic box [0,L_0) x ... x [0,L_{d-1}) with N_a nodes per axis. Nodes are stored
// row-major with the last active axis fastest. Axes beyond dim() have one node.
//
// Two spectral layouts are used: Full (N_0 x ... x N_{d-1}, for complex fields) and Half
// (last axis truncated to N/2+1, the r2c layout for real fields).
//
class SpectralGrid
{
public:
  SpectralGrid() = default;
  SpectralGrid(int dim, std::array<int, 3> points, std::array<double, 3> length);

  static SpectralGrid cube(int dim, int n, double length);

  int dim() const { return dim_; }
  int points(int axis) const { return n_[axis]; }
  double length(int axis) const { return len_[axis]; }
  const std::array<int, 3> &shape() const { return n_; }

  std::size_t size() const { return size_; }
  std::size_t half_size() const { return half_size_; }
  // Extent of the last active axis in the Half layout.
  int half_points() const { return n_[dim_ - 1] / 2 + 1; }
  // Shape of the Half layout (unused axes are 1).
  std::array<int, 3> half_shape() const;

  double volume() const;
  double cell_volume() const { return volume() / static_cast<double>(size_); }
  double spacing(int axis) const { return len_[axis] / n_[axis]; }
  double min_spacing() const;
  double coordinate(int axis, int i) const { return i * spacing(axis); }

  // Signed lattice index in [-N/2, N/2) for storage index i.
  int lattice_index(int axis, int i) const { return i < n_[axis] / 2 ? i : i - n_[axis]; }
  double wavenumber(int axis, int i) const;
  double fundamental(int axis) const;
  // Largest |xi| on the lattice (the corner mode).
  double max_wavenumber() const;
  // Largest |xi_a| over axes, i.e. min over axes of pi N_a / L_a.
  double axis_cutoff() const;

  bool operator==(const SpectralGrid &o) const { return dim_ == o.dim_ && n_ == o.n_ && len_ == o.len_; }
  bool operator!=(const SpectralGrid &o) const { return !(*this == o); }

private:
  int dim_ = 1;
  std::array<int, 3> n_ = {2, 1, 1};
  std::array<double, 3> len_ = {1.0, 1.0, 1.0};
  std::size_t size_ = 2;
  std::size_t half_size_ = 2;
};

}  // namespace lowmach

#endif  // LOWMACH_SPECTRAL_GRID_HPP
