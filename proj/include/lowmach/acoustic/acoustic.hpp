// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_ACOUSTIC_ACOUSTIC_HPP
#define LOWMACH_ACOUSTIC_ACOUSTIC_HPP

#include <span>
#include <string>
#include <vector>

#include "lowmach/dispersion/bogoliubov.hpp"
#include "lowmach/limit/rates.hpp"
#include "lowmach/qns/fluid.hpp"

namespace lowmach
{

struct AcousticState
{
  RealField sigma;  // (rho - 1) / eps
  RealField m;      // rho u
  double time = 0.0;
};

struct SymmetrizedState
{
  RealField sigma_tilde;  // (1 - eps^2 kappa^2 Lap)^{1/2} sigma
  RealField m_tilde;      // (-Lap)^{-1/2} div m
  double time = 0.0;
};

inline DispersionParams dispersion_params(const FluidParams &p) { return {p.eps, p.kappa}; }

AcousticState extract_acoustic(const FluidState &fluid, const FluidParams &p);

// F = div(-Lambda (x) Lambda - 4 kappa^2 grad sqrt(rho) (x) grad sqrt(rho) + 2 nu sqrt(rho) S
//         - (gamma - 1) pi_eps I), assembled from the viscous tensor.
RealField source_F(const FluidState &fluid, const FluidParams &p);

// Linear part of the momentum system about (1, 0): the acoustic operator plus
// nu (Lap m + grad div m) on the momentum.
QnsRhs linearized_operator(const RealField &sigma, const RealField &m, const FluidParams &p);

// Both reject inputs whose mean is not zero (relative 1e-10). desymmetrize returns the
// gradient part Qm.
SymmetrizedState symmetrize(const AcousticState &a, const DispersionParams &p);
AcousticState desymmetrize(const SymmetrizedState &s, const DispersionParams &p);

// Exact flow of d/dt sigma~ = -H m~, d/dt m~ = H sigma~. w = sigma~ + i m~ evolves by e^{itH}.
SymmetrizedState linear_evolve(const SymmetrizedState &s, double t, const DispersionParams &p);

// (-Lap)^{-1/2} div F.
RealField symmetrized_source(const RealField &F);

struct SourceSeries
{
  std::vector<double> times;
  std::vector<RealField> F;  // vector fields, or scalars already symmetrized
};

struct SymmetrizedTrajectory
{
  std::vector<double> times;
  std::vector<SymmetrizedState> states;
};

//
// Mild solution of the forced symmetrized system, d/dt m~ = H sigma~ + F~, on the source time
// grid. Exponential integrator, exact for sources piecewise linear in time.
//
SymmetrizedTrajectory duhamel_solve(const SymmetrizedState &initial, const SourceSeries &source,
                                    const DispersionParams &p);

struct AcousticRun
{
  double eps = 0.0;
  std::vector<double> times;
  std::vector<RealField> rho, m;
};

struct AcousticStudyConfig
{
  double q = 2.2;
  double delta = -1.0;  // negative picks (1/2)(1/2 - 1/q)
  double sigma_q = 4.0;  // space exponent for sigma, gamma = 2 only
};

struct AcousticStudy
{
  RateTable table;
  bool ok = true;
  std::vector<std::string> failures;
};

//
// Over runs sorted by decreasing eps: rho_minus_1 = sup_t ||rho - 1||_{L^2},
// Qm = ||Qm||_{L^2_t B^delta_{q,2}}, and for gamma = 2 sigma = ||sigma||_{L^2_t L^q}.
// Asserts each norm decreasing in eps and a positive Qm rate.
//
AcousticStudy acoustic_decay_study(std::span<const AcousticRun> runs, double gamma,
                                   const AcousticStudyConfig &cfg = {});

}  // namespace lowmach

#endif  // LOWMACH_ACOUSTIC_ACOUSTIC_HPP
