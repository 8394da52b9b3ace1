// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_LIMIT_STUDY_HPP
#define LOWMACH_LIMIT_STUDY_HPP

#include <functional>
#include <string>
#include <vector>

#include "lowmach/limit/data.hpp"
#include "lowmach/limit/ns_solver.hpp"
#include "lowmach/limit/rates.hpp"
#include "lowmach/qns/solver.hpp"

namespace lowmach
{

struct StudyConfig
{
  int dim = 2;
  int points = 256;
  double length = 48.0;
  double width = 1.0;
  double amplitude = 1.0;
  double gamma = 2.0;
  double nu = 0.1;
  double kappa = 0.05;
  std::vector<double> eps = {0.4, 0.2, 0.1, 0.05};
  DataKind kind = DataKind::IllPrepared;
  double t_end = 1.0;
  double sample_every = 0.05;
  double q = 2.2;  // space exponent of the Qm norm, in (2, 9/4)
  DtPolicy dt{.dt_max = 0.005};

  void validate() const;
  SpectralGrid grid() const;
};

struct RunSummary
{
  double eps = 0.0;
  int steps = 0;
  double energy0 = 0.0;
  double energy_slack = 0.0;
  double bd_slack = 0.0;
  double mass_drift = 0.0;  // relative
  bool lower_bound_ok = true;
  DataReport data;
  std::vector<double> norms;  // a, b, c, d in table order
};

struct ConvergenceStudy
{
  StudyConfig config;
  RateTable table;  // empty when aborted
  std::vector<RunSummary> runs;
  LerayReport leray_reference;   // ns_solve reference from P(u0)
  LerayReport leray_extraction;  // P m of the smallest-eps run, reported only
  bool monotone = true;          // norms a-d strictly decreasing along the eps list
  std::vector<std::string> failures;
  bool aborted = false;
  std::string abort_message;
  std::string abort_snapshot;
};

// Called after each finished member run, e.g. to write its series.
using RunHook = std::function<void(double eps, const QnsResult &)>;

//
// One qns_solve per eps from make_data and one ns_solve from P(u0), sampled on a shared frame
// grid. Norms: (a) rho_minus_1 = sup_t ||rho - 1||_{L^2}; (b) Qm = ||Qm||_{L^2_t L^q};
// (c) sqrt_rho_u_minus_u = ||sqrt(rho) u - u||_{L^2_t L^2(K)}; (d) Pm_minus_u =
// ||Pm - u||_{L^2_t L^2(K)}, K the centred half box. Extra report-only series:
// m_Hs_<s> = ||m||_{L^p_t H^s} with p = 4/(1+4s) - 0.1 and rho_L4Hs_<s> = ||rho - 1||_{L^4_t H^s}.
//
ConvergenceStudy convergence_study(const StudyConfig &cfg, const RunHook &hook = {},
                                   const std::string &abort_dir = {});

// L^2 norm restricted to the centred half box.
double window_l2(const RealField &f);

}  // namespace lowmach

#endif  // LOWMACH_LIMIT_STUDY_HPP
