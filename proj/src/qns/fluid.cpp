// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/qns/fluid.hpp"

#include <cmath>

#include "lowmach/spectral/operators.hpp"

namespace lowmach
{

namespace
{

RealField pointwise_sqrt(const RealField &rho)
{
  RealField r(rho.grid(), 1);
  for (std::size_t i = 0; i < rho.size(); i++)
  {
    if (!(rho(0, i) >= 0.0))
      throw InvalidInput("density must be nonnegative and finite");
    r(0, i) = std::sqrt(rho(0, i));
  }
  return r;
}

RealField square(const RealField &f)
{
  RealField r = f;
  for (auto &v : r.values())
    v *= v;
  return r;
}

// out(c) = a * v(c) pointwise for a scalar a.
RealField scale(const RealField &a, const RealField &v)
{
  RealField out = v;
  for (int c = 0; c < v.components(); c++)
    for (std::size_t i = 0; i < v.size(); i++)
      out(c, i) *= a(0, i);
  return out;
}

double sum_sq(const RealField &v, std::size_t i)
{
  double s = 0.0;
  for (int c = 0; c < v.components(); c++)
    s += v(c, i) * v(c, i);
  return s;
}

// (1 + x)^gamma - 1 - gamma x without cancellation near x = 0.
double convex_remainder(double x, double gamma)
{
  if (std::abs(x) < 1e-3)
  {
    double acc = 0.0, binom = gamma, xk = x;
    for (int k = 2; k <= 8; k++)
    {
      binom *= (gamma - (k - 1)) / k;
      xk *= x;
      acc += binom * xk;
    }
    return acc;
  }
  return std::expm1(gamma * std::log1p(x)) - gamma * x;
}

struct VelocityGradient
{
  RealField Du;
  RealField div;
};

VelocityGradient velocity_gradient(const RealField &u)
{
  const int d = u.grid().dim();
  const RealField J = jacobian(u);
  VelocityGradient vg{symmetric_part(J), RealField(u.grid(), 1)};
  for (int a = 0; a < d; a++)
    vg.div += extract_component(J, a * d + a);
  return vg;
}

RealField velocity(const RealField &m, const std::vector<double> &inv_rho)
{
  RealField u = m;
  for (int c = 0; c < m.components(); c++)
    for (std::size_t i = 0; i < m.size(); i++)
      u(c, i) *= inv_rho[i];
  return u;
}

std::vector<double> inverse_density(const RealField &rho, double floor)
{
  std::vector<double> inv(rho.size());
  const double f2 = floor * floor;
  for (std::size_t i = 0; i < rho.size(); i++)
    inv[i] = rho(0, i) >= f2 ? 1.0 / rho(0, i) : 0.0;
  return inv;
}

}  // namespace

void FluidParams::validate() const
{
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw InvalidInput("eps must be positive");
  if (!(kappa > 0.0) || !(nu > kappa))
    throw InvalidInput("need nu > kappa > 0");
  if (!(gamma > 1.0) || !(gamma < 3.0))
    throw InvalidInput("gamma must lie in (1, 3)");
  if (!(delta_reg >= 0.0))
    throw InvalidInput("delta_reg must be nonnegative");
  if (!(rho_floor > 0.0))
    throw InvalidInput("rho_floor must be positive");
}

double FluidParams::mu() const
{
  validate();
  return nu - std::sqrt((nu - kappa) * (nu + kappa));
}

double FluidParams::kappa_tilde_sq(double c) const { return kappa * kappa - 2.0 * nu * c + c * c; }

RealField FluidState::rho() const { return square(sqrt_rho); }

RealField FluidState::momentum() const { return scale(sqrt_rho, Lambda); }

FluidState FluidState::from_density_momentum(const RealField &rho, const RealField &m, double floor,
                                             double time)
{
  if (!rho.is_scalar() || !m.is_vector() || rho.grid() != m.grid())
    throw InvalidInput("from_density_momentum: expected scalar density and vector momentum");
  FluidState s{pointwise_sqrt(rho), m, time};
  for (std::size_t i = 0; i < rho.size(); i++)
  {
    const double r = s.sqrt_rho(0, i);
    for (int c = 0; c < m.components(); c++)
      s.Lambda(c, i) = r >= floor ? m(c, i) / r : 0.0;
  }
  return s;
}

FluidState FluidState::from_density_velocity(const RealField &rho, const RealField &u, double time)
{
  if (!rho.is_scalar() || !u.is_vector() || rho.grid() != u.grid())
    throw InvalidInput("from_density_velocity: expected scalar density and vector velocity");
  FluidState s{pointwise_sqrt(rho), u, time};
  s.Lambda = scale(s.sqrt_rho, u);
  return s;
}

double internal_energy_density(double rho, double gamma, double eps)
{
  const double x = rho - 1.0;
  if (gamma == 1.0)
  {
    // rho log rho - rho + 1
    const double v = rho > 0.0 ? rho * std::log1p(x) - x : 1.0;
    return v / (eps * eps);
  }
  if (rho < 0.0)
    throw InvalidInput("internal_energy_density: negative density");
  return convex_remainder(x, gamma) / (eps * eps * gamma * (gamma - 1.0));
}

EnergyReport total_energy(const FluidState &s, const FluidParams &p)
{
  p.validate();
  const RealField grad = gradient(s.sqrt_rho);
  const double dv = s.grid().cell_volume();
  EnergyReport e;
  for (std::size_t i = 0; i < s.sqrt_rho.size(); i++)
  {
    const double r = s.sqrt_rho(0, i);
    e.kinetic += 0.5 * sum_sq(s.Lambda, i);
    e.quantum += 2.0 * p.kappa * p.kappa * sum_sq(grad, i);
    e.internal += internal_energy_density(r * r, p.gamma, p.eps);
  }
  e.kinetic *= dv;
  e.quantum *= dv;
  e.internal *= dv;
  e.total = e.kinetic + e.quantum + e.internal;
  return e;
}

double bd_entropy(const FluidState &s, const FluidParams &p, double c)
{
  p.validate();
  if (!(c > 0.0) || !(c < p.mu()))
    throw InvalidInput("bd_entropy: c must lie in (0, mu)");
  const RealField grad = gradient(s.sqrt_rho);
  const double kt2 = p.kappa_tilde_sq(c);
  double acc = 0.0;
  for (std::size_t i = 0; i < s.sqrt_rho.size(); i++)
  {
    double w = 0.0;
    for (int a = 0; a < grad.components(); a++)
    {
      const double v = s.Lambda(a, i) + 2.0 * c * grad(a, i);
      w += v * v;
    }
    const double r = s.sqrt_rho(0, i);
    acc += 0.5 * w + internal_energy_density(r * r, p.gamma, p.eps) + kt2 * sum_sq(grad, i);
  }
  return acc * s.grid().cell_volume();
}

ViscousTensor viscous_tensor(const FluidState &s, const FluidParams &p)
{
  p.validate();
  const int d = s.grid().dim();
  const RealField Jm = jacobian(s.momentum());
  const RealField grad = gradient(s.sqrt_rho);
  ViscousTensor vt;
  vt.T = RealField::tensor(s.grid());
  std::size_t excluded = 0;
  for (std::size_t n = 0; n < s.sqrt_rho.size(); n++)
  {
    const double r = s.sqrt_rho(0, n);
    if (r < p.rho_floor)
    {
      excluded++;
      continue;
    }
    for (int i = 0; i < d; i++)
      for (int j = 0; j < d; j++)
        vt.T(i * d + j, n) = (Jm(i * d + j, n) - 2.0 * grad(i, n) * s.Lambda(j, n)) / r;
  }
  vt.S = symmetric_part(vt.T);
  vt.excluded_fraction = static_cast<double>(excluded) / static_cast<double>(s.sqrt_rho.size());
  vt.warning = vt.excluded_fraction > 0.1;
  return vt;
}

BohmForms bohm_forms(const RealField &rho, double kappa, double rho_floor)
{
  if (!rho.is_scalar())
    throw InvalidInput("bohm_forms: density must be scalar");
  const SpectralGrid &g = rho.grid();
  const int d = g.dim();
  const RealField sr = pointwise_sqrt(rho);
  for (const double v : sr.values())
    if (v < rho_floor)
      throw InvalidInput("bohm_forms: density touches the floor");
  const double k2 = kappa * kappa;

  // A: 2 rho grad(Lap sqrt(rho) / sqrt(rho))
  RealField q = laplacian(sr);
  for (std::size_t i = 0; i < q.size(); i++)
    q(0, i) /= sr(0, i);
  RealField A = scale(rho, gradient(q));
  A *= 2.0 * k2;

  // B: div(rho Hess log rho)
  RealField lr(g, 1);
  for (std::size_t i = 0; i < lr.size(); i++)
    lr(0, i) = std::log(rho(0, i));
  RealField B = tensor_divergence(scale(rho, jacobian(gradient(lr))));
  B *= k2;

  // C: grad Lap rho - 4 div(grad sqrt(rho) (x) grad sqrt(rho))
  const RealField gs = gradient(sr);
  RealField outer = RealField::tensor(g);
  for (int i = 0; i < d; i++)
    for (int j = 0; j < d; j++)
      for (std::size_t n = 0; n < g.size(); n++)
        outer(i * d + j, n) = gs(i, n) * gs(j, n);
  RealField C = gradient(laplacian(rho));
  C.axpy(-4.0, tensor_divergence(outer));
  C *= k2;
  return {std::move(A), std::move(B), std::move(C)};
}

RegularizedViscosity regularized_viscosity(double rho, double gamma, double delta)
{
  if (!(rho >= 0.0))
    throw InvalidInput("regularized_viscosity: density must be nonnegative");
  const double r78 = std::pow(rho, 7.0 / 8.0);
  const double rg = std::pow(rho, gamma);
  return {rho + delta * r78 + delta * rg, -delta * r78 / 8.0 + (gamma - 1.0) * delta * rg};
}

FrozenDensity freeze_density(const RealField &rho, const FluidParams &p)
{
  p.validate();
  if (!rho.is_scalar())
    throw InvalidInput("freeze_density: density must be scalar");
  const SpectralGrid &g = rho.grid();
  const int d = g.dim();
  FrozenDensity fd{p, rho, RealField::tensor(g), RealField(g, 1), RealField(g, 1),
                   inverse_density(rho, p.rho_floor)};
  const RealField gs = gradient(pointwise_sqrt(rho));
  const double k4 = 4.0 * p.kappa * p.kappa;
  for (std::size_t n = 0; n < g.size(); n++)
  {
    const double r = rho(0, n);
    const double pi = (p.gamma - 1.0) * internal_energy_density(r, p.gamma, p.eps);
    for (int i = 0; i < d; i++)
    {
      for (int j = 0; j < d; j++)
        fd.stress(i * d + j, n) = -k4 * gs(i, n) * gs(j, n);
      fd.stress(i * d + i, n) -= pi;
    }
    const auto hv = regularized_viscosity(r, p.gamma, p.delta_reg);
    fd.h(0, n) = hv.h;
    fd.g(0, n) = hv.g;
  }
  return fd;
}

RealField momentum_source(const FrozenDensity &fd, const RealField &m, bool dealiased)
{
  const SpectralGrid &g = m.grid();
  const int d = g.dim();
  if (!m.is_vector() || g != fd.rho.grid())
    throw InvalidInput("momentum_source: momentum must be a vector on the density grid");
  const RealField u = velocity(m, fd.inv_rho);
  const VelocityGradient vg = velocity_gradient(u);
  const double two_nu = 2.0 * fd.params.nu;
  RealField tau = fd.stress;
  for (std::size_t n = 0; n < g.size(); n++)
  {
    const double h = two_nu * fd.h(0, n);
    const double gd = two_nu * fd.g(0, n) * vg.div(0, n);
    for (int i = 0; i < d; i++)
    {
      for (int j = 0; j < d; j++)
        tau(i * d + j, n) += h * vg.Du(i * d + j, n) - m(i, n) * u(j, n);
      tau(i * d + i, n) += gd;
    }
  }
  Spectrum F = tensor_divergence(forward(tau));
  if (dealiased)
    dealias(F);
  return inverse_real(F);
}

RealField momentum_source(const RealField &rho, const RealField &m, const FluidParams &p, bool dealiased)
{
  return momentum_source(freeze_density(rho, p), m, dealiased);
}

QnsRhs acoustic_operator(const RealField &sigma, const RealField &m, const FluidParams &p)
{
  p.validate();
  QnsRhs r{divergence(m), RealField()};
  r.drho *= -1.0 / p.eps;
  RealField s = sigma;
  s.axpy(-p.kappa * p.kappa * p.eps * p.eps, laplacian(sigma));
  r.dm = gradient(s);
  r.dm *= -1.0 / p.eps;
  return r;
}

QnsRhs qns_rhs(const FluidState &s, const FluidParams &p)
{
  const RealField rho = s.rho();
  const RealField m = s.momentum();
  RealField sigma = rho;
  for (auto &v : sigma.values())
    v = (v - 1.0) / p.eps;
  QnsRhs a = acoustic_operator(sigma, m, p);
  // drho = eps * dsigma
  a.drho *= p.eps;
  a.dm += momentum_source(rho, m, p, false);
  return a;
}

DissipationBound dissipation_bound(const RealField &rho, const RealField &m, const FluidParams &p)
{
  p.validate();
  const RealField u = velocity(m, inverse_density(rho, p.rho_floor));
  const VelocityGradient vg = velocity_gradient(u);
  DissipationBound b;
  for (std::size_t n = 0; n < rho.size(); n++)
  {
    const auto hv = regularized_viscosity(rho(0, n), p.gamma, p.delta_reg);
    const double du2 = sum_sq(vg.Du, n);
    const double dv2 = vg.div(0, n) * vg.div(0, n);
    b.weighted += hv.h * du2 + hv.g * dv2;
    b.lower += rho(0, n) * du2;
  }
  const double dv = rho.grid().cell_volume();
  b.weighted *= dv;
  b.lower *= dv;
  b.holds = b.weighted >= b.lower - 1e-10 * std::max(1.0, std::abs(b.lower));
  return b;
}

double dissipation_rate(const RealField &rho, const RealField &m, const FluidParams &p)
{
  return 2.0 * p.nu * dissipation_bound(rho, m, p).weighted;
}

}  // namespace lowmach
