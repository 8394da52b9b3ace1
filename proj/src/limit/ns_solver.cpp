// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/limit/ns_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lowmach/spectral/helmholtz.hpp"
#include "lowmach/spectral/norms.hpp"
#include "lowmach/spectral/operators.hpp"

namespace lowmach
{

namespace
{

double spectral_energy(const Spectrum &u)
{
  double acc = 0.0;
  for (int c = 0; c < u.components(); c++)
    acc += weighted_power(u, c, [](const Wavevector &) { return 1.0; });
  return 0.5 * acc * u.grid().volume();
}

double spectral_enstrophy(const Spectrum &u)
{
  double acc = 0.0;
  for (int c = 0; c < u.components(); c++)
    acc += weighted_power(u, c, [](const Wavevector &xi) { return norm2(xi); });
  return acc * u.grid().volume();
}

double divergence_ratio(const Spectrum &u)
{
  const Spectrum dv = divergence(u);
  const double num = std::sqrt(2.0 * spectral_energy(dv));
  const double den = std::sqrt(2.0 * spectral_energy(u) + spectral_enstrophy(u));
  return den > 0.0 ? num / den : 0.0;
}

double max_speed(const RealField &u)
{
  double mx = 0.0;
  for (std::size_t n = 0; n < u.size(); n++)
  {
    double s = 0.0;
    for (int c = 0; c < u.components(); c++)
      s += u(c, n) * u(c, n);
    mx = std::max(mx, s);
  }
  return std::sqrt(mx);
}

class NSIntegrator
{
public:
  NSIntegrator(const SpectralGrid &g, double nu) : g_(g), nu_(nu)
  {
    for_each_mode(g, Layout::Half, [&](std::size_t, const Wavevector &xi, bool) { k2_.push_back(norm2(xi)); });
  }

  // -P div(u (x) u), dealiased.
  Spectrum nonlinear(const Spectrum &uh) const
  {
    const int d = g_.dim();
    const RealField u = inverse_real(uh);
    RealField T = RealField::tensor(g_);
    for (int i = 0; i < d; i++)
      for (int j = 0; j < d; j++)
        for (std::size_t n = 0; n < g_.size(); n++)
          T(i * d + j, n) = u(i, n) * u(j, n);
    Spectrum N = tensor_divergence(forward(T));
    project_solenoidal(N);
    dealias(N);
    N *= -1.0;
    return N;
  }

  Spectrum decay(const Spectrum &s, double t) const
  {
    Spectrum out = s;
    for (int c = 0; c < s.components(); c++)
    {
      auto v = out.component(c);
      for (std::size_t i = 0; i < v.size(); i++)
        v[i] *= std::exp(-nu_ * k2_[i] * t);
    }
    return out;
  }

  Spectrum step(const Spectrum &u, double h) const
  {
    const Spectrum a = nonlinear(u);
    Spectrum ua = u;
    ua.axpy(0.5 * h, a);
    ua = decay(ua, 0.5 * h);
    const Spectrum b = nonlinear(ua);
    Spectrum ub = decay(u, 0.5 * h);
    ub.axpy(0.5 * h, b);
    const Spectrum c = nonlinear(ub);
    Spectrum uc = decay(u, h);
    uc.axpy(h, decay(c, 0.5 * h));
    const Spectrum dd = nonlinear(uc);
    Spectrum bc = b;
    bc += c;
    Spectrum out = decay(u, h);
    out.axpy(h / 6.0, decay(a, h));
    out.axpy(h / 3.0, decay(bc, 0.5 * h));
    out.axpy(h / 6.0, dd);
    return out;
  }

private:
  SpectralGrid g_;
  double nu_;
  std::vector<double> k2_;
};

}  // namespace

double NSResult::energy_residual() const
{
  double r = 0.0;
  for (std::size_t i = 0; i < energy.size(); i++)
    r = std::max(r, energy[i] + dissipation[i] - energy.front());
  return r;
}

std::vector<double> cumulative_simpson(std::span<const double> f, double h)
{
  std::vector<double> F(f.size(), 0.0);
  if (f.size() == 2)
    F[1] = 0.5 * h * (f[0] + f[1]);
  if (f.size() < 3)
    return F;
  F[1] = h * (5.0 * f[0] + 8.0 * f[1] - f[2]) / 12.0;
  for (std::size_t n = 2; n < f.size(); n++)
  {
    if (n % 2 == 0)
      F[n] = F[n - 2] + h / 3.0 * (f[n - 2] + 4.0 * f[n - 1] + f[n]);
    else
      F[n] = F[n - 1] + h * (-f[n - 2] + 8.0 * f[n - 1] + 5.0 * f[n]) / 12.0;
  }
  return F;
}

NSResult ns_solve(const NSState &initial, const NSOptions &opt)
{
  const SpectralGrid &g = initial.u.grid();
  if (!initial.u.is_vector())
    throw InvalidInput("ns_solve: velocity must be a vector field");
  if (!(initial.nu >= 0.0))
    throw InvalidInput("ns_solve: viscosity must be nonnegative");
  if (!(opt.t_end > 0.0) || !(opt.dt_max > 0.0) || opt.sample_every < 0.0)
    throw InvalidInput("ns_solve: t_end and dt_max must be positive");

  Spectrum uh = forward(initial.u);
  if (divergence_ratio(uh) > 1e-10)
    throw InvalidInput("ns_solve: initial velocity is not divergence-free");

  const double h = g.min_spacing();
  const double u0 = max_speed(initial.u);
  double dt0 = opt.dt_max;
  if (u0 > 0.0)
    dt0 = std::min(dt0, 0.5 * opt.c_adv * h / u0);
  const double frame = opt.sample_every > 0.0 ? opt.sample_every : opt.t_end;
  const double frames_d = opt.t_end / frame;
  const auto n_frames = static_cast<long>(std::llround(frames_d));
  if (std::abs(frames_d - n_frames) > 1e-9 * frames_d || n_frames < 1)
    throw InvalidInput("ns_solve: t_end must be a multiple of sample_every");
  const long per_frame = static_cast<long>(std::ceil(frame / dt0 - 1e-9));
  const double dt = frame / per_frame;

  NSIntegrator integ(g, initial.nu);
  NSResult res;
  std::vector<double> rates;
  auto record = [&](double t) {
    res.step_times.push_back(t);
    res.energy.push_back(spectral_energy(uh));
    rates.push_back(initial.nu * spectral_enstrophy(uh));
  };
  double t = initial.time;
  record(t);
  res.times.push_back(t);
  res.frames.push_back(initial.u);
  for (long f = 0; f < n_frames; f++)
  {
    for (long s = 0; s < per_frame; s++)
    {
      uh = integ.step(uh, dt);
      t = initial.time + (f * per_frame + s + 1) * dt;
      res.steps++;
      for (const cplx &v : uh.values())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
          throw NumericalAbort("ns_solve: non-finite velocity", t);
      res.max_divergence = std::max(res.max_divergence, divergence_ratio(uh));
      record(t);
    }
    const RealField u = inverse_real(uh);
    if (max_speed(u) * dt > opt.c_adv * h)
      throw NumericalAbort("ns_solve: CFL violation", t);
    res.times.push_back(t);
    res.frames.push_back(u);
  }
  res.dissipation = cumulative_simpson(rates, dt);
  res.final_state = {res.frames.back(), t, initial.nu};
  return res;
}

RealField taylor_green(const SpectralGrid &g, double nu, double t)
{
  if (g.dim() != 2)
    throw InvalidInput("taylor_green: two-dimensional grid expected");
  const double k = 2.0 * std::numbers::pi / g.length(0);
  if (std::abs(g.length(1) - g.length(0)) > 1e-12 * g.length(0))
    throw InvalidInput("taylor_green: square box expected");
  const double amp = std::exp(-2.0 * nu * k * k * t);
  RealField u = RealField::vector(g);
  const auto a = sample<double>(g, [&](const auto &x) { return amp * std::sin(k * x[0]) * std::cos(k * x[1]); });
  const auto b = sample<double>(g, [&](const auto &x) { return -amp * std::cos(k * x[0]) * std::sin(k * x[1]); });
  std::copy(a.values().begin(), a.values().end(), u.component(0).begin());
  std::copy(b.values().begin(), b.values().end(), u.component(1).begin());
  return u;
}

LerayReport leray_energy_check(std::span<const double> times, std::span<const RealField> frames,
                               double nu, const RealField &u0, double tol)
{
  if (times.size() != frames.size() || times.empty())
    throw InvalidInput("leray_energy_check: one frame per time expected");
  const double h = times.size() > 1 ? times[1] - times[0] : 0.0;
  for (std::size_t n = 1; n < times.size(); n++)
    if (std::abs(times[n] - times[n - 1] - h) > 1e-9 * std::max(h, 1e-300))
      throw InvalidInput("leray_energy_check: frames must be uniformly spaced");
  LerayReport r;
  r.energy0 = 0.5 * std::pow(l2_norm(u0), 2);
  std::vector<double> rates, energy;
  for (const auto &u : frames)
  {
    const Spectrum uh = forward(u);
    energy.push_back(spectral_energy(uh));
    rates.push_back(nu * spectral_enstrophy(uh));
  }
  const auto D = cumulative_simpson(rates, h);
  for (std::size_t n = 0; n < times.size(); n++)
  {
    r.times.push_back(times[n]);
    r.residual.push_back(energy[n] + D[n] - r.energy0);
    r.max_residual = std::max(r.max_residual, r.residual.back());
  }
  r.ok = r.max_residual <= tol * r.energy0;
  return r;
}

}  // namespace lowmach
