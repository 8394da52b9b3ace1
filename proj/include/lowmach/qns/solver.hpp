// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_QNS_SOLVER_HPP
#define LOWMACH_QNS_SOLVER_HPP

#include <span>
#include <string>
#include <vector>

#include "lowmach/qns/fluid.hpp"

namespace lowmach
{

//
// dt = min(c_adv h / max|u|, (c_visc / d) h^2 / nu, c_q h^2 / kappa, dt_max), h the smallest
// spacing. A positive fixed_dt is used as is and the run aborts once it exceeds that bound.
//
struct DtPolicy
{
  double fixed_dt = 0.0;
  double c_adv = 0.4;
  double c_visc = 0.25;
  double c_q = 0.4;
  double dt_max = 0.01;
};

struct QnsOptions
{
  double t_end = 1.0;
  double sample_every = 0.0;  // frame cadence, 0 keeps no frames
  double bd_c = 0.0;          // BD weight in (0, mu); 0 picks mu/2
  double energy_tol = 1e-4;   // abort once E + D - E(0) > energy_tol E(0) max(t, 1)
  std::string abort_dir;      // where to dump (rho, m) on abort, empty for none
  std::string checkpoint_dir;  // snapshots of (rho, m) at each frame, empty for none
  DtPolicy dt;
};

struct QnsSeriesRow
{
  double t = 0.0;
  double dt = 0.0;
  double kinetic = 0.0;
  double quantum = 0.0;
  double internal = 0.0;
  double energy = 0.0;
  double dissipation = 0.0;  // accumulated, trapezoid in time
  double bd = 0.0;
  double mass = 0.0;
  double min_sqrt_rho = 0.0;
  double max_speed = 0.0;
  double hess_sqrt_rho = 0.0;  // int |Hess sqrt(rho)|^2, diagnostic only
};

struct QnsResult
{
  FluidState final_state;
  std::vector<QnsSeriesRow> series;  // one row per step, plus t = 0
  std::vector<double> frame_times;
  std::vector<RealField> frame_rho, frame_m;
  bool lower_bound_ok = true;  // weighted dissipation >= int rho |Du|^2 at every step
  double bd_c = 0.0;
  int steps = 0;

  double energy_slack() const;  // largest rise of E + D above its running minimum
  double bd_slack() const;
  void write_series(const std::string &path) const;
};

// Largest rise of v above its running minimum; 0 for a non-increasing sequence.
double monotone_slack(std::span<const double> v);

// Largest stable step for the state under the policy (ignores fixed_dt).
double stable_dt(const RealField &rho, const RealField &m, const FluidParams &p, const DtPolicy &pol);

//
// Strang splitting: exact linear acoustic flow for dt/2, RK4 on the remaining momentum source
// with rho frozen, acoustic flow for dt/2. The source is dealiased by the 2/3 rule.
//
QnsResult qns_solve(const FluidState &s0, const FluidParams &p, const QnsOptions &opt);

// Exact acoustic flow of (sigma, m) for time t, in place.
void acoustic_flow(RealField &sigma, RealField &m, double t, double eps, double kappa);

}  // namespace lowmach

#endif  // LOWMACH_QNS_SOLVER_HPP
