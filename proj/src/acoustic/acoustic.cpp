// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/acoustic/acoustic.hpp"

#include <algorithm>
#include <cmath>

#include "lowmach/spectral/helmholtz.hpp"
#include "lowmach/spectral/norms.hpp"
#include "lowmach/spectral/operators.hpp"

namespace lowmach
{

namespace
{

void require_mean_zero(const RealField &f, const char *what)
{
  double mx = 1.0;
  for (double v : f.values())
    mx = std::max(mx, std::abs(v));
  for (int c = 0; c < f.components(); c++)
  {
    double acc = 0.0;
    for (double v : f.component(c))
      acc += v;
    if (std::abs(acc / static_cast<double>(f.size())) > 1e-10 * mx)
      throw InvalidInput(std::string(what) + ": input must have zero mean");
  }
}

double stretch(double k, const DispersionParams &p)
{
  const double a = p.eps * p.kappa * k;
  return std::sqrt(1.0 + a * a);
}

// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - 1 - z)/z^2
cplx phi1(cplx z)
{
  if (std::abs(z) < 1e-4)
    return 1.0 + z / 2.0 + z * z / 6.0;
  return (std::exp(z) - 1.0) / z;
}

cplx phi2(cplx z)
{
  if (std::abs(z) < 1e-3)
    return 0.5 + z / 6.0 + z * z / 24.0 + z * z * z / 120.0;
  return (std::exp(z) - 1.0 - z) / (z * z);
}

ComplexField pack(const SymmetrizedState &s)
{
  ComplexField w(s.sigma_tilde.grid(), 1);
  for (std::size_t i = 0; i < w.size(); i++)
    w(0, i) = cplx(s.sigma_tilde(0, i), s.m_tilde(0, i));
  return w;
}

SymmetrizedState unpack(const ComplexField &w, double time)
{
  return {real_part(w), imag_part(w), time};
}

}  // namespace

AcousticState extract_acoustic(const FluidState &fluid, const FluidParams &p)
{
  p.validate();
  RealField sigma = fluid.rho();
  for (auto &v : sigma.values())
    v = (v - 1.0) / p.eps;
  return {std::move(sigma), fluid.momentum(), fluid.time};
}

RealField source_F(const FluidState &fluid, const FluidParams &p)
{
  const ViscousTensor vt = viscous_tensor(fluid, p);
  const SpectralGrid &g = fluid.grid();
  const int d = g.dim();
  const RealField gs = gradient(fluid.sqrt_rho);
  RealField tau = RealField::tensor(g);
  const double k4 = 4.0 * p.kappa * p.kappa;
  for (std::size_t n = 0; n < g.size(); n++)
  {
    const double r = fluid.sqrt_rho(0, n);
    const double pi = (p.gamma - 1.0) * internal_energy_density(r * r, p.gamma, p.eps);
    for (int i = 0; i < d; i++)
    {
      for (int j = 0; j < d; j++)
        tau(i * d + j, n) = -fluid.Lambda(i, n) * fluid.Lambda(j, n) - k4 * gs(i, n) * gs(j, n) +
                            2.0 * p.nu * r * vt.S(i * d + j, n);
      tau(i * d + i, n) -= pi;
    }
  }
  return tensor_divergence(tau);
}

QnsRhs linearized_operator(const RealField &sigma, const RealField &m, const FluidParams &p)
{
  QnsRhs r = acoustic_operator(sigma, m, p);
  RealField visc = laplacian(m);
  visc += gradient(divergence(m));
  r.dm.axpy(p.nu, visc);
  return r;
}

SymmetrizedState symmetrize(const AcousticState &a, const DispersionParams &p)
{
  p.validate();
  if (!a.sigma.is_scalar() || !a.m.is_vector() || a.sigma.grid() != a.m.grid())
    throw InvalidInput("symmetrize: expected scalar sigma and vector m on one grid");
  require_mean_zero(a.sigma, "symmetrize");
  require_mean_zero(a.m, "symmetrize");
  const SpectralGrid &g = a.sigma.grid();
  Spectrum s = forward(a.sigma);
  const Spectrum mh = forward(a.m);
  Spectrum mt(g, 1, Layout::Half);
  for_each_derivative_mode(g, Layout::Half, [&](std::size_t i, const Wavevector &xi) {
    const double k = std::sqrt(norm2(xi));
    s(0, i) *= stretch(k, p);
    if (k == 0.0)
      return;
    cplx acc = 0.0;
    for (int c = 0; c < g.dim(); c++)
      acc += xi[c] * mh(c, i);
    mt(0, i) = cplx(0.0, 1.0 / k) * acc;
  });
  return {inverse_real(s), inverse_real(mt), a.time};
}

AcousticState desymmetrize(const SymmetrizedState &sym, const DispersionParams &p)
{
  p.validate();
  if (!sym.sigma_tilde.is_scalar() || !sym.m_tilde.is_scalar() ||
      sym.sigma_tilde.grid() != sym.m_tilde.grid())
    throw InvalidInput("desymmetrize: expected two scalars on one grid");
  require_mean_zero(sym.sigma_tilde, "desymmetrize");
  require_mean_zero(sym.m_tilde, "desymmetrize");
  const SpectralGrid &g = sym.sigma_tilde.grid();
  Spectrum s = forward(sym.sigma_tilde);
  const Spectrum mt = forward(sym.m_tilde);
  Spectrum mh(g, g.dim(), Layout::Half);
  for_each_derivative_mode(g, Layout::Half, [&](std::size_t i, const Wavevector &xi) {
    const double k = std::sqrt(norm2(xi));
    s(0, i) /= stretch(k, p);
    if (k == 0.0)
      return;
    for (int c = 0; c < g.dim(); c++)
      mh(c, i) = cplx(0.0, -xi[c] / k) * mt(0, i);
  });
  return {inverse_real(s), inverse_real(mh), sym.time};
}

SymmetrizedState linear_evolve(const SymmetrizedState &sym, double t, const DispersionParams &p)
{
  p.validate();
  const SpectralGrid &g = sym.sigma_tilde.grid();
  Spectrum w = forward(pack(sym));
  for_each_derivative_mode(g, Layout::Full, [&](std::size_t i, const Wavevector &xi) {
    w(0, i) *= std::polar(1.0, t * omega(std::sqrt(norm2(xi)), p));
  });
  return unpack(inverse_complex(w), sym.time + t);
}

RealField symmetrized_source(const RealField &F)
{
  if (!F.is_vector())
    throw InvalidInput("symmetrized_source: expected a vector field");
  const SpectralGrid &g = F.grid();
  const Spectrum fh = forward(F);
  Spectrum out(g, 1, Layout::Half);
  for_each_derivative_mode(g, Layout::Half, [&](std::size_t i, const Wavevector &xi) {
    const double k = std::sqrt(norm2(xi));
    if (k == 0.0)
      return;
    cplx acc = 0.0;
    for (int c = 0; c < g.dim(); c++)
      acc += xi[c] * fh(c, i);
    out(0, i) = cplx(0.0, 1.0 / k) * acc;
  });
  return inverse_real(out);
}

SymmetrizedTrajectory duhamel_solve(const SymmetrizedState &initial, const SourceSeries &source,
                                    const DispersionParams &p)
{
  p.validate();
  const auto &ts = source.times;
  if (ts.size() < 1 || source.F.size() != ts.size())
    throw InvalidInput("duhamel_solve: one source field per time expected");
  if (std::abs(ts.front() - initial.time) > 1e-12 * std::max(1.0, std::abs(initial.time)))
    throw InvalidInput("duhamel_solve: source grid must start at the initial time");
  for (std::size_t n = 1; n < ts.size(); n++)
    if (!(ts[n] > ts[n - 1]))
      throw InvalidInput("duhamel_solve: source times must increase");
  const SpectralGrid &g = initial.sigma_tilde.grid();

  std::vector<Spectrum> Fh;
  for (const auto &F : source.F)
  {
    if (F.grid() != g)
      throw InvalidInput("duhamel_solve: source grid mismatch");
    const RealField Ft = F.is_scalar() ? F : symmetrized_source(F);
    Fh.push_back(forward(to_complex(Ft)));
  }
  std::vector<double> w_of;
  for_each_derivative_mode(g, Layout::Full, [&](std::size_t, const Wavevector &xi) {
    w_of.push_back(omega(std::sqrt(norm2(xi)), p));
  });

  SymmetrizedTrajectory traj;
  traj.times.push_back(ts.front());
  traj.states.push_back(initial);
  Spectrum w = forward(pack(initial));
  const cplx I(0.0, 1.0);
  for (std::size_t n = 0; n + 1 < ts.size(); n++)
  {
    const double h = ts[n + 1] - ts[n];
    for (std::size_t i = 0; i < w.modes(); i++)
    {
      const cplx z = I * (w_of[i] * h);
      const cplx f0 = Fh[n](0, i), f1 = Fh[n + 1](0, i);
      w(0, i) = std::exp(z) * w(0, i) + I * h * (phi1(z) * f0 + phi2(z) * (f1 - f0));
    }
    traj.times.push_back(ts[n + 1]);
    traj.states.push_back(unpack(inverse_complex(w), ts[n + 1]));
  }
  return traj;
}

AcousticStudy acoustic_decay_study(std::span<const AcousticRun> runs, double gamma,
                                   const AcousticStudyConfig &cfg)
{
  if (runs.size() < 3)
    throw InvalidInput("acoustic_decay_study: need at least three eps samples");
  if (!(cfg.q > 2.0))
    throw InvalidInput("acoustic_decay_study: q must exceed 2");
  const double delta = cfg.delta < 0.0 ? 0.5 * (0.5 - 1.0 / cfg.q) : cfg.delta;
  std::vector<double> eps, rho_sup, qm, sig;
  const bool with_sigma = gamma == 2.0;
  for (const auto &run : runs)
  {
    if (run.times.size() < 2 || run.rho.size() != run.times.size() || run.m.size() != run.times.size())
      throw InvalidInput("acoustic_decay_study: each run needs matching frames");
    eps.push_back(run.eps);
    double sup = 0.0;
    std::vector<double> qv, sv;
    for (std::size_t n = 0; n < run.times.size(); n++)
    {
      RealField dr = run.rho[n];
      for (auto &v : dr.values())
        v -= 1.0;
      sup = std::max(sup, l2_norm(dr));
      qv.push_back(besov_norm(helmholtz_Q(run.m[n]), delta, cfg.q, 2.0));
      if (with_sigma)
      {
        dr *= 1.0 / run.eps;
        sv.push_back(lq_norm(dr, cfg.sigma_q));
      }
    }
    rho_sup.push_back(sup);
    qm.push_back(mixed_norm(run.times, qv, 2.0));
    if (with_sigma)
      sig.push_back(mixed_norm(run.times, sv, 2.0));
  }

  AcousticStudy st{RateTable(eps), true, {}};
  auto check = [&](const RateTable::Series &s) {
    if (!s.decreasing)
    {
      st.ok = false;
      st.failures.push_back(s.id + " is not decreasing in eps");
    }
  };
  check(st.table.add("rho_minus_1", kInf, 2.0, 0.0, rho_sup));
  const auto &q = st.table.add("Qm", 2.0, cfg.q, delta, qm);
  check(q);
  if (!(q.fit.rate > 0.0))
  {
    st.ok = false;
    st.failures.push_back("Qm rate is not positive");
  }
  if (with_sigma)
    check(st.table.add("sigma", 2.0, cfg.sigma_q, 0.0, sig));
  return st;
}

}  // namespace lowmach
