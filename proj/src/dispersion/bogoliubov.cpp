// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/dispersion/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lowmach/spectral/multiplier.hpp"

namespace lowmach
{

void DispersionParams::validate() const
{
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw InvalidInput("dispersion: eps must be positive");
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw InvalidInput("dispersion: kappa must be positive");
}

double omega(double xi_norm, const DispersionParams &p)
{
  const double a = p.eps * p.kappa * xi_norm;
  return xi_norm * std::sqrt(1.0 + a * a) / p.eps;
}

PhaseProfile::PhaseProfile(const DispersionParams &p) : p_(p) { p_.validate(); }

double PhaseProfile::value(double r) const { return omega(r, p_); }

double PhaseProfile::d1(double r) const
{
  const double a2 = std::pow(p_.eps * p_.kappa * r, 2);
  return (1.0 + 2.0 * a2) / (p_.eps * std::sqrt(1.0 + a2));
}

double PhaseProfile::d2(double r) const
{
  const double a = p_.eps * p_.kappa;
  const double a2 = std::pow(a * r, 2);
  return a * a * r * (3.0 + 2.0 * a2) / (p_.eps * std::pow(1.0 + a2, 1.5));
}

PhaseValues PhaseProfile::operator()(double r) const { return {value(r), d1(r), d2(r)}; }

double hessian_det(double r, const DispersionParams &p, int d)
{
  if (!(r > 0.0))
    throw InvalidInput("hessian_det: r must be positive");
  if (d < 1 || d > 3)
    throw InvalidInput("hessian_det: d must be 1, 2 or 3");
  PhaseProfile phi(p);
  return std::pow(phi.d1(r) / r, d - 1) * phi.d2(r);
}

std::vector<double> log_grid(double lo, double hi, int n)
{
  if (!(lo > 0.0) || !(hi > lo) || n < 2)
    throw InvalidInput("log_grid: need 0 < lo < hi and n >= 2");
  std::vector<double> g(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; i++)
    g[i] = std::exp(a + (b - a) * i / (n - 1));
  return g;
}

namespace
{

struct RatioScan
{
  double max_ratio = 0.0, witness = 0.0, lo = 0.0, hi = 0.0;
  bool finite = true;
};

RatioScan scan_ratio(std::span<const double> grid, double kappa, int d)
{
  RatioScan s;
  s.lo = std::numeric_limits<double>::infinity();
  const DispersionParams unscaled{1.0, kappa};
  for (double l : grid)
  {
    const double inv = 1.0 / std::sqrt(hessian_det(l, unscaled, d));
    const double kl = kappa * l;
    const double rhs = std::pow(kappa, -0.5 * d) * std::pow(kl / std::sqrt(1.0 + kl * kl), 0.5 * (d - 2));
    const double ratio = inv / rhs;
    if (!std::isfinite(ratio))
      s.finite = false;
    if (ratio > s.max_ratio)
    {
      s.max_ratio = ratio;
      s.witness = l;
    }
    s.lo = std::min(s.lo, inv);
    s.hi = std::max(s.hi, inv);
  }
  return s;
}

}  // namespace

HBoundReport h_bound_check(std::span<const double> lambda_grid, double kappa, int d)
{
  if (lambda_grid.empty())
    throw InvalidInput("h_bound_check: empty grid");
  if (d < 2 || d > 3)
    throw InvalidInput("h_bound_check: d must be 2 or 3");
  if (!(kappa > 0.0))
    throw InvalidInput("h_bound_check: kappa must be positive");
  for (double l : lambda_grid)
    if (!(l > 0.0))
      throw InvalidInput("h_bound_check: grid values must be positive");

  std::vector<double> refined;
  refined.reserve(2 * lambda_grid.size());
  for (std::size_t i = 0; i < lambda_grid.size(); i++)
  {
    refined.push_back(lambda_grid[i]);
    if (i + 1 < lambda_grid.size())
      refined.push_back(std::sqrt(lambda_grid[i] * lambda_grid[i + 1]));
  }
  const RatioScan a = scan_ratio(lambda_grid, kappa, d);
  const RatioScan b = scan_ratio(refined, kappa, d);

  HBoundReport r;
  r.max_ratio = a.max_ratio;
  r.witness = a.witness;
  r.max_ratio_refined = b.max_ratio;
  r.finite = a.finite && b.finite && std::isfinite(a.max_ratio);
  r.refinement_change = std::abs(b.max_ratio - a.max_ratio) / a.max_ratio;
  r.stable = r.finite && r.refinement_change < 0.05;
  r.min_inv_sqrt_h = a.lo;
  r.max_inv_sqrt_h = a.hi;
  return r;
}

void propagate_inplace(Spectrum &s, double t, const DispersionParams &p)
{
  if (s.layout() != Layout::Full)
    throw InvalidInput("propagate needs a Full-layout spectrum");
  p.validate();
  multiply(s, radial([&](double k) { return std::polar(1.0, t * omega(k, p)); }), ZeroMode::Identity);
}

ComplexField propagate(const ComplexField &f, double t, const DispersionParams &p)
{
  Spectrum s = forward(f);
  propagate_inplace(s, t, p);
  return inverse_complex(s);
}

ComplexField propagate(const RealField &f, double t, const DispersionParams &p)
{
  return propagate(to_complex(f), t, p);
}

double u_eps_symbol(double xi_norm, double alpha, const DispersionParams &p)
{
  if (!(alpha >= 0.0))
    throw InvalidInput("u_eps_power: alpha must be nonnegative");
  if (alpha == 0.0)
    return 1.0;
  const double r = p.eps * p.kappa * xi_norm;
  return std::pow(r / std::sqrt(1.0 + r * r), alpha);
}

RealField u_eps_power(const RealField &f, double alpha, const DispersionParams &p)
{
  p.validate();
  return apply_real_multiplier(f, radial([&](double k) { return cplx(u_eps_symbol(k, alpha, p)); }));
}

ComplexField u_eps_power(const ComplexField &f, double alpha, const DispersionParams &p)
{
  p.validate();
  return apply_multiplier(f, radial([&](double k) { return cplx(u_eps_symbol(k, alpha, p)); }));
}

}  // namespace lowmach
