// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_DISPERSION_BOGOLIUBOV_HPP
#define LOWMACH_DISPERSION_BOGOLIUBOV_HPP

#include <span>
#include <vector>

#include "lowmach/spectral/spectrum.hpp"

namespace lowmach
{

struct DispersionParams
{
  double eps = 1.0;
  double kappa = 1.0;
  void validate() const;
};

// omega(r) = (1/eps) sqrt(r^2 + eps^2 kappa^2 r^4).
double omega(double xi_norm, const DispersionParams &p);

struct PhaseValues
{
  double value, d1, d2;
};

// phi_eps(r) = (1/eps) r sqrt(1 + (eps kappa r)^2) and its first two derivatives.
class PhaseProfile
{
public:
  explicit PhaseProfile(const DispersionParams &p);
  PhaseValues operator()(double r) const;
  double value(double r) const;
  double d1(double r) const;
  double d2(double r) const;
  const DispersionParams &params() const { return p_; }

private:
  DispersionParams p_;
};

// det Hess phi(|.|) = (phi'(r)/r)^{d-1} phi''(r); r must be positive.
double hessian_det(double r, const DispersionParams &p, int d);

struct HBoundReport
{
  double max_ratio = 0.0;
  double witness = 0.0;            // lambda attaining max_ratio
  double max_ratio_refined = 0.0;  // same on the 2x refined grid
  double refinement_change = 0.0;  // relative change of max_ratio under refinement
  bool finite = false;
  bool stable = false;             // refinement_change < 5%
  double min_inv_sqrt_h = 0.0;     // envelope of h^{-1/2} over the grid
  double max_inv_sqrt_h = 0.0;
};

// Ratio h(l)^{-1/2} / [kappa^{-d/2} (kappa l / sqrt(1 + (kappa l)^2))^{(d-2)/2}] for the
// unscaled phase (eps = 1). The refined grid inserts geometric midpoints.
HBoundReport h_bound_check(std::span<const double> lambda_grid, double kappa, int d);

std::vector<double> log_grid(double lo, double hi, int n);

// e^{itH} : multiplier exp(i t omega(|xi|)).
ComplexField propagate(const ComplexField &f, double t, const DispersionParams &p);
ComplexField propagate(const RealField &f, double t, const DispersionParams &p);
void propagate_inplace(Spectrum &s, double t, const DispersionParams &p);

// U_eps^alpha : multiplier m(eps kappa |xi|)^alpha with m(r) = r / sqrt(1 + r^2). kappa = 1
// gives the operator sqrt(-eps^2 Lap) / sqrt(1 - eps^2 Lap).
double u_eps_symbol(double xi_norm, double alpha, const DispersionParams &p);
RealField u_eps_power(const RealField &f, double alpha, const DispersionParams &p);
ComplexField u_eps_power(const ComplexField &f, double alpha, const DispersionParams &p);

}  // namespace lowmach

#endif  // LOWMACH_DISPERSION_BOGOLIUBOV_HPP
