// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/limit/study.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lowmach/spectral/helmholtz.hpp"
#include "lowmach/spectral/norms.hpp"

namespace lowmach
{

namespace
{

constexpr double kMomentumS[] = {0.0, 0.25, 0.5};
constexpr double kDensityS[] = {-1.0, 0.0, 0.5};

std::string tag(const char *stem, double s)
{
  std::ostringstream os;
  os << stem << s;
  return os.str();
}

// L^{4/(1+4s)-}, realized at p - 0.1.
double momentum_time_exponent(double s) { return 4.0 / (1.0 + 4.0 * s) - 0.1; }

struct FrameNorms
{
  std::vector<double> rho, qm, lam, pm;
  std::vector<std::vector<double>> m_hs, rho_hs;
};

FrameNorms frame_norms(const QnsResult &run, const NSResult &ref, double q)
{
  FrameNorms fn;
  fn.m_hs.resize(std::size(kMomentumS));
  fn.rho_hs.resize(std::size(kDensityS));
  for (std::size_t n = 0; n < run.frame_times.size(); n++)
  {
    const RealField &rho = run.frame_rho[n];
    const RealField &m = run.frame_m[n];
    const RealField &u = ref.frames[n];
    RealField dr = rho;
    for (auto &v : dr.values())
      v -= 1.0;
    fn.rho.push_back(l2_norm(dr));
    fn.qm.push_back(lq_norm(helmholtz_Q(m), q));
    RealField lam = FluidState::from_density_momentum(rho, m, 1e-6).Lambda;
    lam -= u;
    fn.lam.push_back(window_l2(lam));
    RealField pm = helmholtz_P(m);
    pm -= u;
    fn.pm.push_back(window_l2(pm));
    for (std::size_t i = 0; i < std::size(kMomentumS); i++)
      fn.m_hs[i].push_back(sobolev_norm(m, kMomentumS[i]));
    for (std::size_t i = 0; i < std::size(kDensityS); i++)
      fn.rho_hs[i].push_back(sobolev_norm(dr, kDensityS[i]));
  }
  return fn;
}

}  // namespace

void StudyConfig::validate() const
{
  if (dim < 2 || dim > 3)
    throw InvalidInput("study: dim must be 2 or 3");
  if (points < 8 || points % 2 != 0)
    throw InvalidInput("study: points must be even and >= 8");
  if (!(length > 0.0) || !(width > 0.0) || !(amplitude >= 0.0))
    throw InvalidInput("study: length, width must be positive");
  if (eps.size() < 3)
    throw InvalidInput("study: need at least three eps values");
  for (std::size_t i = 1; i < eps.size(); i++)
    if (!(eps[i] < eps[i - 1]) || !(eps[i] > 0.0))
      throw InvalidInput("study: eps values must be positive and decreasing");
  if (!(q > 2.0) || !(q < 2.25))
    throw InvalidInput("study: q must lie in (2, 9/4)");
  if (!(t_end > 0.0) || !(sample_every > 0.0))
    throw InvalidInput("study: t_end and sample_every must be positive");
  FluidParams p;
  p.gamma = gamma;
  p.nu = nu;
  p.kappa = kappa;
  p.validate();
}

SpectralGrid StudyConfig::grid() const { return SpectralGrid::cube(dim, points, length); }

double window_l2(const RealField &f)
{
  const SpectralGrid &g = f.grid();
  const int d = g.dim();
  double acc = 0.0;
  std::size_t n = 0;
  for (int i = 0; i < g.points(0); i++)
    for (int j = 0; j < g.points(1); j++)
      for (int l = 0; l < g.points(2); l++, n++)
      {
        const int idx[3] = {i, j, l};
        bool inside = true;
        for (int a = 0; a < d; a++)
        {
          const double x = g.coordinate(a, idx[a]) - 0.5 * g.length(a);
          inside = inside && std::abs(x) <= 0.25 * g.length(a);
        }
        if (!inside)
          continue;
        for (int c = 0; c < f.components(); c++)
          acc += f(c, n) * f(c, n);
      }
  return std::sqrt(acc * g.cell_volume());
}

ConvergenceStudy convergence_study(const StudyConfig &cfg, const RunHook &hook, const std::string &abort_dir)
{
  cfg.validate();
  const SpectralGrid g = cfg.grid();
  ConvergenceStudy st;
  st.config = cfg;

  // The limit datum does not depend on eps.
  const InitialData ref_data = make_data(cfg.kind, cfg.amplitude, cfg.eps.front(), cfg.gamma, g, cfg.kappa,
                                         cfg.width);
  NSOptions nso;
  nso.t_end = cfg.t_end;
  nso.sample_every = cfg.sample_every;
  nso.dt_max = cfg.dt.dt_max;
  nso.c_adv = cfg.dt.c_adv;
  const NSResult ref = ns_solve({ref_data.limit_velocity, 0.0, cfg.nu}, nso);
  st.leray_reference = leray_energy_check(ref.times, ref.frames, cfg.nu, ref_data.limit_velocity);

  std::vector<FrameNorms> all;
  for (double eps : cfg.eps)
  {
    FluidParams p;
    p.eps = eps;
    p.nu = cfg.nu;
    p.kappa = cfg.kappa;
    p.gamma = cfg.gamma;
    const InitialData data = make_data(cfg.kind, cfg.amplitude, eps, cfg.gamma, g, cfg.kappa, cfg.width);
    QnsOptions opt;
    opt.t_end = cfg.t_end;
    opt.sample_every = cfg.sample_every;
    opt.dt = cfg.dt;
    opt.abort_dir = abort_dir;
    QnsResult run;
    try
    {
      run = qns_solve(data.state, p, opt);
    }
    catch (const NumericalAbort &e)
    {
      std::ostringstream os;
      os << "run eps = " << eps << " aborted at t = " << e.time() << ": " << e.what();
      st.aborted = true;
      st.abort_message = os.str();
      st.abort_snapshot = e.snapshot();
      return st;
    }
    if (run.frame_times.size() != ref.times.size())
      throw NumericalAbort("study: member and reference frame grids differ", run.final_state.time);
    if (hook)
      hook(eps, run);
    if (eps == cfg.eps.back())
    {
      // Limit extraction: P m of the smallest-eps run against P(u0).
      std::vector<RealField> pm;
      for (const auto &m : run.frame_m)
        pm.push_back(helmholtz_P(m));
      st.leray_extraction = leray_energy_check(run.frame_times, pm, cfg.nu, ref_data.limit_velocity);
    }

    RunSummary rs;
    rs.eps = eps;
    rs.steps = run.steps;
    rs.energy0 = run.series.front().energy;
    rs.energy_slack = run.energy_slack();
    rs.bd_slack = run.bd_slack();
    rs.mass_drift = std::abs(run.series.back().mass - run.series.front().mass) / run.series.front().mass;
    rs.lower_bound_ok = run.lower_bound_ok;
    rs.data = data.report;
    FrameNorms fn = frame_norms(run, ref, cfg.q);
    rs.norms = {*std::max_element(fn.rho.begin(), fn.rho.end()), mixed_norm(run.frame_times, fn.qm, 2.0),
                mixed_norm(run.frame_times, fn.lam, 2.0), mixed_norm(run.frame_times, fn.pm, 2.0)};
    st.runs.push_back(std::move(rs));
    all.push_back(std::move(fn));
  }

  st.table = RateTable(cfg.eps);
  const char *ids[] = {"rho_minus_1", "Qm", "sqrt_rho_u_minus_u", "Pm_minus_u"};
  const double ps[] = {kInf, 2.0, 2.0, 2.0};
  const double qs[] = {2.0, cfg.q, 2.0, 2.0};
  for (int k = 0; k < 4; k++)
  {
    std::vector<double> v;
    for (const auto &r : st.runs)
      v.push_back(r.norms[k]);
    const auto &s = st.table.add(ids[k], ps[k], qs[k], 0.0, v);
    if (!s.decreasing)
    {
      st.monotone = false;
      st.failures.push_back(s.id + " is not strictly decreasing in eps");
    }
  }
  if (!(st.table.at("Qm").fit.rate > 0.0))
    st.failures.push_back("Qm rate is not positive");

  for (std::size_t i = 0; i < std::size(kMomentumS); i++)
  {
    const double pt = momentum_time_exponent(kMomentumS[i]);
    std::vector<double> v;
    for (std::size_t r = 0; r < all.size(); r++)
      v.push_back(mixed_norm(ref.times, all[r].m_hs[i], pt));
    st.table.add(tag("m_Hs_", kMomentumS[i]), pt, 2.0, kMomentumS[i], v);
  }
  for (std::size_t i = 0; i < std::size(kDensityS); i++)
  {
    std::vector<double> v;
    for (std::size_t r = 0; r < all.size(); r++)
      v.push_back(mixed_norm(ref.times, all[r].rho_hs[i], 4.0));
    st.table.add(tag("rho_L4Hs_", kDensityS[i]), 4.0, 2.0, kDensityS[i], v);
  }

  return st;
}

}  // namespace lowmach
