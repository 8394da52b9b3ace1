// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_DISPERSION_STRICHARTZ_HPP
#define LOWMACH_DISPERSION_STRICHARTZ_HPP

#include <span>
#include <vector>

#include "lowmach/dispersion/bogoliubov.hpp"
#include "lowmach/spectral/norms.hpp"

namespace lowmach
{

struct AdmissiblePair
{
  double p = kInf;
  double q = 2.0;
  int d = 3;
};

// 2/p + d/q = d/2 with p, q in [2, inf], excluding (2, inf, 2). Exact for rational inputs up
// to rounding (tolerance 1e-12).
bool is_admissible(double p, double q, int d);
inline bool is_admissible(const AdmissiblePair &a) { return is_admissible(a.p, a.q, a.d); }
double holder_conjugate(double p);
// Hoelder conjugates (p', q'); the result is generally not admissible itself.
AdmissiblePair admissible_dual(const AdmissiblePair &a);

struct StrichartzReport
{
  AdmissiblePair pair;
  double alpha = 0.0;
  std::vector<double> eps, lhs, rhs, ratio;
  double max_ratio = 0.0;
  double trend = 0.0;         // log-log slope of ratio against eps
  bool non_increasing = false;  // ratio does not grow as eps decreases (trend >= -0.05)
};

//
// LHS = || e^{itH_eps} f ||_{L^p_t B^0_{q,2}} over the (uniform) time grid,
// RHS = || f ||_{B^alpha_{2,2}}, ratio = LHS / (eps^alpha RHS).
//
StrichartzReport strichartz_probe(const RealField &f, double kappa, const AdmissiblePair &pair,
                                  double alpha, std::span<const double> times,
                                  std::span<const double> eps_list);

//
// Retarded Duhamel term D(t) = int_0^t e^{i(t-s)H_eps} F ds for a frozen source F, per mode
// (e^{it omega} - 1)/(i omega) F. LHS = ||D||_{L^p_t B^0_{q,2}},
// RHS = ||F||_{L^1_t B^alpha_{2,2}} (dual of the energy pair).
//
StrichartzReport strichartz_probe_duhamel(const RealField &F, double kappa, const AdmissiblePair &pair,
                                          double alpha, std::span<const double> times,
                                          std::span<const double> eps_list);

// The frozen-source Duhamel term at time t.
ComplexField duhamel_frozen(const RealField &F, double t, const DispersionParams &p);

}  // namespace lowmach

#endif  // LOWMACH_DISPERSION_STRICHARTZ_HPP
