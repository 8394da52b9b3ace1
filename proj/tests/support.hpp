// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_TESTS_SUPPORT_HPP
#define LOWMACH_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lowmach/spectral/field.hpp"

namespace lowmach::testing
{

inline constexpr double kPi = std::numbers::pi;

// Sum of random real Fourier modes with integer lattice index |k_a| <= kmax on each axis,
// built in real space so it does not lean on the transform under test.
inline RealField random_modes(const SpectralGrid &g, int components, unsigned seed, int kmax = 4,
                              int terms = 12, bool mean_free = true)
{
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(-kmax, kmax);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  RealField out(g, components);
  for (int c = 0; c < components; c++)
  {
    if (!mean_free)
    {
      const double c0 = unit(rng);
      for (auto &v : out.component(c))
        v = c0;
    }
    for (int t = 0; t < terms; t++)
    {
      int k[3] = {0, 0, 0};
      for (int a = 0; a < g.dim(); a++)
        k[a] = pick(rng);
      if (k[0] == 0 && k[1] == 0 && k[2] == 0)
        continue;
      const double amp = unit(rng), phase = kPi * unit(rng);
      const RealField mode = sample<double>(g, [&](const auto &x) {
        double arg = phase;
        for (int a = 0; a < g.dim(); a++)
          arg += 2.0 * kPi * k[a] * x[a] / g.length(a);
        return amp * std::cos(arg);
      });
      auto dst = out.component(c);
      for (std::size_t i = 0; i < dst.size(); i++)
        dst[i] += mode(0, i);
    }
  }
  return out;
}

// Plain nodal L2 distance, sqrt(sum |a - b|^2 dV).
template <typename T>
double l2_diff(const Field<T> &a, const Field<T> &b)
{
  double acc = 0.0;
  for (std::size_t i = 0; i < a.values().size(); i++)
    acc += std::norm(a.values()[i] - b.values()[i]);
  return std::sqrt(acc * a.grid().cell_volume());
}

template <typename T>
double l2_of(const Field<T> &a)
{
  double acc = 0.0;
  for (const auto &v : a.values())
    acc += std::norm(v);
  return std::sqrt(acc * a.grid().cell_volume());
}

template <typename T>
double max_diff(const Field<T> &a, const Field<T> &b)
{
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); i++)
    m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

template <typename T>
double max_abs(const Field<T> &a)
{
  double m = 0.0;
  for (const auto &v : a.values())
    m = std::max(m, std::abs(v));
  return m;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace lowmach::testing

#endif  // LOWMACH_TESTS_SUPPORT_HPP
