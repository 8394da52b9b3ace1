// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_LIMIT_NS_SOLVER_HPP
#define LOWMACH_LIMIT_NS_SOLVER_HPP

#include <span>
#include <vector>

#include "lowmach/spectral/field.hpp"

namespace lowmach
{

struct NSState
{
  RealField u;
  double time = 0.0;
  double nu = 0.1;
};

struct NSOptions
{
  double t_end = 1.0;
  double sample_every = 0.0;  // frame cadence; 0 keeps the endpoints only
  double dt_max = 0.01;
  double c_adv = 0.4;
};

struct NSResult
{
  NSState final_state;
  std::vector<double> times;  // frames
  std::vector<RealField> frames;
  std::vector<double> step_times, energy, dissipation;  // per step; dissipation accumulated
  double max_divergence = 0.0;  // max over steps of ||div u||_{L^2} / ||u||_{H^1}
  int steps = 0;

  // max_t (E(t) + D(t) - E(0)) from the per-step bookkeeping.
  double energy_residual() const;
};

//
// Pseudospectral projection method: P div(u (x) u) dealiased by the 2/3 rule, viscous term
// through an exact integrating factor, RK4 in time with a uniform step.
//
NSResult ns_solve(const NSState &initial, const NSOptions &opt);

// 2D Taylor-Green vortex (sin kx cos ky, -cos kx sin ky) e^{-2 nu k^2 t} on a box of side 2 pi / k.
RealField taylor_green(const SpectralGrid &g, double nu, double t);

struct LerayReport
{
  std::vector<double> times, residual;  // E(t) + nu int_0^t ||grad u||^2 - E(0)
  double energy0 = 0.0;
  double max_residual = 0.0;
  bool ok = true;  // max_residual <= tol E(0)
};

// Dissipation integrated by composite Simpson on the (uniform) frame grid.
LerayReport leray_energy_check(std::span<const double> times, std::span<const RealField> frames,
                               double nu, const RealField &u0, double tol = 1e-6);

// Cumulative integral of uniformly sampled f, Simpson pairs plus a three-point end panel.
std::vector<double> cumulative_simpson(std::span<const double> f, double h);

}  // namespace lowmach

#endif  // LOWMACH_LIMIT_NS_SOLVER_HPP
