// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/qns/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <sstream>

#include "lowmach/io/csv.hpp"
#include "lowmach/io/snapshot.hpp"
#include "lowmach/spectral/operators.hpp"

namespace lowmach
{

namespace
{

double max_speed(const RealField &rho, const RealField &m)
{
  double mx = 0.0;
  for (std::size_t n = 0; n < rho.size(); n++)
  {
    double s = 0.0;
    for (int c = 0; c < m.components(); c++)
      s += m(c, n) * m(c, n);
    if (rho(0, n) > 0.0)
      mx = std::max(mx, std::sqrt(s) / rho(0, n));
  }
  return mx;
}

RealField to_sigma(const RealField &rho, double eps)
{
  RealField s = rho;
  for (auto &v : s.values())
    v = (v - 1.0) / eps;
  return s;
}

RealField to_rho(const RealField &sigma, double eps)
{
  RealField r = sigma;
  for (auto &v : r.values())
    v = 1.0 + eps * v;
  return r;
}

// int |Hess sqrt(rho)|^2
double hessian_square(const RealField &sr)
{
  const RealField H = jacobian(gradient(sr));
  double acc = 0.0;
  for (double v : H.values())
    acc += v * v;
  return acc * sr.grid().cell_volume();
}

bool all_finite(const RealField &f)
{
  return std::all_of(f.values().begin(), f.values().end(), [](double v) { return std::isfinite(v); });
}

class Integrator
{
public:
  Integrator(const FluidParams &p, const QnsOptions &opt) : p_(p), opt_(opt) {}

  QnsResult run(const FluidState &s0)
  {
    rho_ = s0.rho();
    m_ = s0.momentum();
    t_ = s0.time;
    const double t_end = t_ + opt_.t_end;
    res_.bd_c = opt_.bd_c == 0.0 ? 0.5 * p_.mu() : opt_.bd_c;
    record(0.0, 0.0);
    e0_ = res_.series.front().energy;
    double next_frame = t_;
    sample_frame(next_frame);

    const double frame_dt = opt_.sample_every;
    const double fixed = opt_.dt.fixed_dt;
    while (t_ < t_end - 1e-12 * std::max(1.0, t_end))
    {
      const double bound = stable_dt(rho_, m_, p_, opt_.dt);
      double dt;
      if (fixed > 0.0)
      {
        if (fixed > bound * (1.0 + 1e-12))
          abort("CFL violation");
        dt = std::min(fixed, t_end - t_);
      }
      else
      {
        double target = t_end;
        if (frame_dt > 0.0)
          target = std::min(target, next_frame);
        const double span = target - t_;
        dt = span / std::ceil(span / bound * (1.0 - 1e-12));
      }
      const double rate_prev = rate_;
      step(dt);
      t_ += dt;
      res_.steps++;
      check_state();
      record(dt, rate_prev);
      if (frame_dt > 0.0 && t_ >= next_frame - 1e-9 * frame_dt)
        sample_frame(next_frame);
    }
    res_.final_state = FluidState::from_density_momentum(rho_, m_, p_.rho_floor, t_);
    return std::move(res_);
  }

private:
  void sample_frame(double &next_frame)
  {
    if (opt_.sample_every <= 0.0)
      return;
    res_.frame_times.push_back(t_);
    res_.frame_rho.push_back(rho_);
    res_.frame_m.push_back(m_);
    if (!opt_.checkpoint_dir.empty())
    {
      std::filesystem::create_directories(opt_.checkpoint_dir);
      char name[32];
      std::snprintf(name, sizeof name, "frame_%05zu", res_.frame_times.size() - 1);
      write_snapshot((std::filesystem::path(opt_.checkpoint_dir) / name).string(),
                     stack<double>({rho_, m_}), t_);
    }
    next_frame += opt_.sample_every;
  }

  void step(double dt)
  {
    RealField sigma = to_sigma(rho_, p_.eps);
    acoustic_flow(sigma, m_, 0.5 * dt, p_.eps, p_.kappa);
    rho_ = to_rho(sigma, p_.eps);
    if (p_.delta_reg == 0.0 &&
        *std::min_element(rho_.values().begin(), rho_.values().end()) < p_.rho_floor * p_.rho_floor)
      abort("vacuum: density fell below the floor");

    const FrozenDensity fd = freeze_density(rho_, p_);
    const RealField k1 = momentum_source(fd, m_, true);
    RealField y = m_;
    y.axpy(0.5 * dt, k1);
    const RealField k2 = momentum_source(fd, y, true);
    y = m_;
    y.axpy(0.5 * dt, k2);
    const RealField k3 = momentum_source(fd, y, true);
    y = m_;
    y.axpy(dt, k3);
    const RealField k4 = momentum_source(fd, y, true);
    m_.axpy(dt / 6.0, k1);
    m_.axpy(dt / 3.0, k2);
    m_.axpy(dt / 3.0, k3);
    m_.axpy(dt / 6.0, k4);

    acoustic_flow(sigma, m_, 0.5 * dt, p_.eps, p_.kappa);
    rho_ = to_rho(sigma, p_.eps);
  }

  void check_state()
  {
    if (!all_finite(rho_) || !all_finite(m_))
      abort("non-finite value in the solution");
    const double mn = *std::min_element(rho_.values().begin(), rho_.values().end());
    if (mn < 0.0 || (p_.delta_reg == 0.0 && mn < p_.rho_floor * p_.rho_floor))
      abort("vacuum: density fell below the floor");
  }

  void record(double dt, double rate_prev)
  {
    const FluidState s = FluidState::from_density_momentum(rho_, m_, p_.rho_floor, t_);
    const EnergyReport e = total_energy(s, p_);
    const DissipationBound b = dissipation_bound(rho_, m_, p_);
    if (!b.holds)
      res_.lower_bound_ok = false;
    rate_ = 2.0 * p_.nu * b.weighted;
    dissipation_ += 0.5 * dt * (rate_prev + rate_);

    QnsSeriesRow r;
    r.t = t_;
    r.dt = dt;
    r.kinetic = e.kinetic;
    r.quantum = e.quantum;
    r.internal = e.internal;
    r.energy = e.total;
    r.dissipation = dissipation_;
    r.bd = bd_entropy(s, p_, res_.bd_c);
    r.mass = integral(rho_);
    r.hess_sqrt_rho = hessian_square(s.sqrt_rho);
    r.min_sqrt_rho = std::sqrt(std::max(0.0, *std::min_element(rho_.values().begin(), rho_.values().end())));
    r.max_speed = max_speed(rho_, m_);
    res_.series.push_back(r);

    if (dt > 0.0)
    {
      const double excess = r.energy + r.dissipation - e0_;
      if (excess > opt_.energy_tol * std::abs(e0_) * std::max(t_, 1.0))
      {
        std::ostringstream os;
        os << "energy increase " << excess << " exceeds tolerance";
        abort(os.str());
      }
    }
  }

  [[noreturn]] void abort(const std::string &why)
  {
    std::string stem;
    if (!opt_.abort_dir.empty())
    {
      std::filesystem::create_directories(opt_.abort_dir);
      stem = (std::filesystem::path(opt_.abort_dir) / "abort_state").string();
      write_snapshot(stem, stack<double>({rho_, m_}), t_);
    }
    throw NumericalAbort(why, t_, stem);
  }

  FluidParams p_;
  QnsOptions opt_;
  RealField rho_, m_;
  double t_ = 0.0;
  double e0_ = 0.0;
  double rate_ = 0.0;
  double dissipation_ = 0.0;
  QnsResult res_;
};

}  // namespace

double monotone_slack(std::span<const double> v)
{
  double slack = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (double x : v)
  {
    lo = std::min(lo, x);
    slack = std::max(slack, x - lo);
  }
  return slack;
}

double QnsResult::energy_slack() const
{
  std::vector<double> v;
  for (const auto &r : series)
    v.push_back(r.energy + r.dissipation);
  return monotone_slack(v);
}

double QnsResult::bd_slack() const
{
  std::vector<double> v;
  for (const auto &r : series)
    v.push_back(r.bd);
  return monotone_slack(v);
}

void QnsResult::write_series(const std::string &path) const
{
  CsvWriter w(path, {"t", "dt", "kinetic", "quantum", "internal", "energy", "dissipation",
                     "energy_plus_dissipation", "bd", "mass", "min_sqrt_rho", "max_speed",
                     "hess_sqrt_rho"});
  for (const auto &r : series)
    w.row({r.t, r.dt, r.kinetic, r.quantum, r.internal, r.energy, r.dissipation,
           r.energy + r.dissipation, r.bd, r.mass, r.min_sqrt_rho, r.max_speed, r.hess_sqrt_rho});
}

double stable_dt(const RealField &rho, const RealField &m, const FluidParams &p, const DtPolicy &pol)
{
  const SpectralGrid &g = rho.grid();
  const double h = g.min_spacing();
  double dt = pol.dt_max;
  const double u = max_speed(rho, m);
  if (u > 0.0)
    dt = std::min(dt, pol.c_adv * h / u);
  if (p.nu > 0.0)
    dt = std::min(dt, pol.c_visc / g.dim() * h * h / p.nu);
  if (p.kappa > 0.0)
    dt = std::min(dt, pol.c_q * h * h / p.kappa);
  return dt;
}

void acoustic_flow(RealField &sigma, RealField &m, double t, double eps, double kappa)
{
  const SpectralGrid &g = sigma.grid();
  const int d = g.dim();
  Spectrum s = forward(sigma);
  Spectrum mh = forward(m);
  const double ek2 = eps * eps * kappa * kappa;
  for_each_derivative_mode(g, Layout::Half, [&](std::size_t idx, const Wavevector &xi) {
    const double k = std::sqrt(norm2(xi));
    if (k == 0.0)
      return;
    const double sc = std::sqrt(1.0 + ek2 * k * k);
    const double w = k * sc / eps;
    const double c = std::cos(w * t), sn = std::sin(w * t);
    cplx b = 0.0;
    for (int a = 0; a < d; a++)
      b += xi[a] / k * mh(a, idx);
    // (sc sigma, b) rotates by the angle w t; b is the longitudinal momentum amplitude.
    const cplx st = sc * s(0, idx);
    s(0, idx) = (c * st - cplx(0.0, sn) * b) / sc;
    const cplx db = -cplx(0.0, sn) * st + (c - 1.0) * b;
    for (int a = 0; a < d; a++)
      mh(a, idx) += db * (xi[a] / k);
  });
  sigma = inverse_real(s);
  m = inverse_real(mh);
}

QnsResult qns_solve(const FluidState &s0, const FluidParams &p, const QnsOptions &opt)
{
  p.validate();
  if (!(opt.t_end > 0.0))
    throw InvalidInput("qns_solve: t_end must be positive");
  if (opt.sample_every < 0.0)
    throw InvalidInput("qns_solve: sample_every must be nonnegative");
  if (opt.dt.fixed_dt > 0.0 && opt.sample_every > 0.0)
  {
    const double r = opt.sample_every / opt.dt.fixed_dt;
    if (std::abs(r - std::round(r)) > 1e-9 * r)
      throw InvalidInput("qns_solve: sample_every must be a multiple of fixed_dt");
  }
  if (!s0.sqrt_rho.is_scalar() || !s0.Lambda.is_vector())
    throw InvalidInput("qns_solve: malformed state");
  return Integrator(p, opt).run(s0);
}

}  // namespace lowmach
