// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_QNS_FLUID_HPP
#define LOWMACH_QNS_FLUID_HPP

#include "lowmach/spectral/field.hpp"

namespace lowmach
{

struct FluidParams
{
  double eps = 0.1;
  double nu = 0.1;
  double kappa = 0.05;
  double gamma = 2.0;
  double delta_reg = 0.0;
  double rho_floor = 1e-6;

  void validate() const;
  // mu = nu - sqrt(nu^2 - kappa^2), the upper end of the admissible c range.
  double mu() const;
  // kappa~^2 = kappa^2 - 2 nu c + c^2.
  double kappa_tilde_sq(double c) const;
};

//
// Working unknowns (sqrt(rho), Lambda = sqrt(rho) u). Density is only ever read as
// sqrt_rho^2 and the momentum as sqrt_rho * Lambda.
//
struct FluidState
{
  RealField sqrt_rho;
  RealField Lambda;
  double time = 0.0;

  const SpectralGrid &grid() const { return sqrt_rho.grid(); }
  RealField rho() const;
  RealField momentum() const;

  // rho must be nonnegative. Lambda = m / sqrt(rho) where sqrt(rho) >= floor, 0 elsewhere.
  static FluidState from_density_momentum(const RealField &rho, const RealField &m, double floor,
                                          double time = 0.0);
  static FluidState from_density_velocity(const RealField &rho, const RealField &u, double time = 0.0);
};

// pi_eps(rho) = (rho^gamma - 1 - gamma (rho - 1)) / (eps^2 gamma (gamma - 1)).
double internal_energy_density(double rho, double gamma, double eps);

struct EnergyReport
{
  double kinetic = 0.0;   // int |Lambda|^2 / 2
  double quantum = 0.0;   // int 2 kappa^2 |grad sqrt(rho)|^2
  double internal = 0.0;  // int pi_eps(rho)
  double total = 0.0;
  double dissipation_accumulated = 0.0;
};

EnergyReport total_energy(const FluidState &s, const FluidParams &p);

// B = int |Lambda + 2c grad sqrt(rho)|^2 / 2 + pi_eps + kappa~^2 |grad sqrt(rho)|^2, 0 < c < mu.
double bd_entropy(const FluidState &s, const FluidParams &p, double c);

struct ViscousTensor
{
  RealField T;  // sqrt(rho) T = grad(rho u) - 2 grad sqrt(rho) (x) Lambda, (i,j) = d_i (.)_j
  RealField S;  // symmetric part
  double excluded_fraction = 0.0;  // share of nodes with sqrt(rho) < rho_floor (T set to 0)
  bool warning = false;            // excluded_fraction > 10%
};

ViscousTensor viscous_tensor(const FluidState &s, const FluidParams &p);

// Quantum force kappa^2 x {2 rho grad(Lap sqrt(rho)/sqrt(rho)), div(rho Hess log rho),
// grad Lap rho - 4 div(grad sqrt(rho) (x) grad sqrt(rho))}.
struct BohmForms
{
  RealField A, B, C;
};

BohmForms bohm_forms(const RealField &rho, double kappa, double rho_floor = 1e-6);

struct RegularizedViscosity
{
  double h = 0.0;
  double g = 0.0;
};

// h = rho + delta rho^{7/8} + delta rho^gamma, g = rho h' - h.
RegularizedViscosity regularized_viscosity(double rho, double gamma, double delta);

struct QnsRhs
{
  RealField drho;
  RealField dm;
};

// Full right-hand side of the scaled system in (rho, m).
QnsRhs qns_rhs(const FluidState &s, const FluidParams &p);

//
// Everything but the stiff linear acoustic part:
// F = div(-rho u (x) u - 4 kappa^2 grad sqrt(rho) (x) grad sqrt(rho) + 2 nu (h Du + g div u I)
//         - (gamma - 1) pi_eps I).
// With delta_reg = 0 the viscous stress is sqrt(rho) S = rho Du.
//
RealField momentum_source(const RealField &rho, const RealField &m, const FluidParams &p,
                          bool dealiased = false);

// Linear acoustic operator (-(1/eps) div m, -(1/eps) grad(1 - kappa^2 eps^2 Lap) sigma).
QnsRhs acoustic_operator(const RealField &sigma, const RealField &m, const FluidParams &p);

//
// Density-only pieces of the source, reused while rho is frozen inside a split step.
//
struct FrozenDensity
{
  FluidParams params;
  RealField rho;
  RealField stress;  // -4 kappa^2 grad sqrt(rho) (x) grad sqrt(rho) - (gamma - 1) pi_eps I
  RealField h, g;    // regularized viscosity coefficients
  std::vector<double> inv_rho;  // 1/rho, 0 below rho_floor^2
};

FrozenDensity freeze_density(const RealField &rho, const FluidParams &p);
RealField momentum_source(const FrozenDensity &fd, const RealField &m, bool dealiased);

struct DissipationBound
{
  double weighted = 0.0;  // int h |Du|^2 + g |div u|^2
  double lower = 0.0;     // int rho |Du|^2
  bool holds = true;      // weighted >= lower - 1e-10
};

DissipationBound dissipation_bound(const RealField &rho, const RealField &m, const FluidParams &p);

// 2 nu int (h |Du|^2 + g |div u|^2), the instantaneous energy dissipation rate.
double dissipation_rate(const RealField &rho, const RealField &m, const FluidParams &p);

}  // namespace lowmach

#endif  // LOWMACH_QNS_FLUID_HPP
