// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/dispersion/decay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lowmach/fit.hpp"
#include "lowmach/spectral/littlewood_paley.hpp"

namespace lowmach
{

namespace
{

constexpr double pi = std::numbers::pi;

struct Mode
{
  std::size_t index;
  double k;
  double weight;
};

// Modes inside the shell support with their cutoff weights, Full layout.
std::vector<Mode> shell_modes(const SpectralGrid &g, double R)
{
  std::vector<Mode> modes;
  for_each_mode(g, Layout::Full, [&](std::size_t i, const Wavevector &xi, bool) {
    const double k = std::sqrt(norm2(xi));
    const double w = lp_phi(k / R);
    if (w > 0.0)
      modes.push_back({i, k, w});
  });
  return modes;
}

void check_window(double R, const DispersionParams &p, std::span<const double> times, double length,
                  double cutoff)
{
  if (times.size() < 2)
    throw InvalidInput("measure_decay: need at least two times");
  for (std::size_t i = 1; i < times.size(); i++)
    if (!(times[i] > times[i - 1]))
      throw InvalidInput("measure_decay: times must increase strictly");
  if (!(times.front() > 0.0))
    throw InvalidInput("measure_decay: times must be positive");
  if (cutoff < 2.0 * R)
    throw InvalidInput("measure_decay: grid cutoff is below the shell support 2R");
  const double tu = first_unsafe_time(R, p, length);
  if (times.back() > tu)
  {
    std::ostringstream os;
    os << "box too small: packet reaches the boundary at t = " << tu;
    throw UnderResolved(os.str(), tu);
  }
}

double cartesian_sup(const SpectralGrid &g, const std::vector<Mode> &modes, const DispersionParams &p,
                     double t)
{
  Spectrum s(g, 1, Layout::Full);
  const double inv_vol = 1.0 / g.volume();
  for (const auto &m : modes)
    s(0, m.index) = std::polar(m.weight * inv_vol, t * omega(m.k, p));
  const ComplexField u = inverse_complex(s);
  double mx = 0.0;
  for (const auto &v : u.values())
    mx = std::max(mx, std::norm(v));
  return std::sqrt(mx);
}

double radial_sup(const RadialGrid &rg, double R, const DispersionParams &p, double t)
{
  const SpectralGrid g(1, {rg.points, 1, 1}, {rg.length, 1.0, 1.0});
  const double dk = 2.0 * pi / rg.length;
  Spectrum s(g, 1, Layout::Full);
  cplx centre = 0.0;
  for (int i = 0; i < rg.points; i++)
  {
    const double k = g.wavenumber(0, i);
    const double w = lp_phi(std::abs(k) / R);
    if (w == 0.0)
      continue;
    const cplx gk = std::polar(w, t * omega(std::abs(k), p));
    s(0, i) = k * gk * dk;
    centre += k * k * gk * dk;
  }
  const ComplexField v = inverse_complex(s);
  // u(r) = (1/(2 pi^2 r)) int_0^inf k sin(kr) g dk, and the integral is v(r)/(2i).
  double mx = std::abs(centre) / (4.0 * pi * pi);
  const double h = g.spacing(0);
  for (int j = 1; j < rg.points / 2; j++)
  {
    const double r = j * h;
    mx = std::max(mx, std::abs(v(0, j)) / (4.0 * pi * pi * r));
  }
  return mx;
}

}  // namespace

DecayFit fit_decay(std::span<const double> times, std::span<const double> values, int d)
{
  const LogLogFit f = loglog_fit(times, values);
  DecayFit out;
  out.d = d;
  out.times.assign(times.begin(), times.end());
  out.sup_values.assign(values.begin(), values.end());
  out.slope = f.slope;
  out.prefactor = std::exp(f.intercept);
  out.residual = f.residual;
  double acc = 0.0;
  for (std::size_t i = 0; i < times.size(); i++)
    acc += std::log(values[i]) + 0.5 * d * std::log(times[i]);
  out.pinned_prefactor = std::exp(acc / times.size());
  return out;
}

double first_unsafe_time(double R, const DispersionParams &p, double box_length)
{
  PhaseProfile phi(p);
  return std::max(0.0, 0.5 * box_length - pi / R) / phi.d1(1.8 * R);
}

double decay_sup(double R, const DispersionParams &p, double t, const SpectralGrid &grid)
{
  return cartesian_sup(grid, shell_modes(grid, R), p, t);
}

double decay_sup(double R, const DispersionParams &p, double t, const RadialGrid &grid)
{
  return radial_sup(grid, R, p, t);
}

DecayFit measure_decay(double R, const DispersionParams &p, std::span<const double> times,
                       const SpectralGrid &grid)
{
  p.validate();
  double len = grid.length(0);
  for (int a = 1; a < grid.dim(); a++)
    len = std::min(len, grid.length(a));
  check_window(R, p, times, len, grid.axis_cutoff());
  const auto modes = shell_modes(grid, R);
  std::vector<double> sup;
  for (double t : times)
    sup.push_back(cartesian_sup(grid, modes, p, t));
  DecayFit f = fit_decay(times, sup, grid.dim());
  f.params = p;
  f.R = R;
  return f;
}

DecayFit measure_decay(double R, const DispersionParams &p, std::span<const double> times,
                       const RadialGrid &grid)
{
  p.validate();
  if (grid.points < 4 || grid.points % 2 != 0)
    throw InvalidInput("radial grid needs an even number of points");
  check_window(R, p, times, grid.length, pi * grid.points / grid.length);
  std::vector<double> sup;
  for (double t : times)
    sup.push_back(radial_sup(grid, R, p, t));
  DecayFit f = fit_decay(times, sup, 3);
  f.params = p;
  f.R = R;
  return f;
}

RadialGrid radial_grid_for(double R, const DispersionParams &p, double t_max)
{
  PhaseProfile phi(p);
  RadialGrid g;
  g.length = 2.2 * (phi.d1(1.8 * R) * t_max + pi / R);
  const double need = 2.2 * R * g.length / pi;
  int n = 1024;
  while (n < need)
    n *= 2;
  g.points = n;
  return g;
}

EpsGainReport measure_eps_gain(double R, double kappa, std::span<const double> eps_list,
                               double onset_factor, int samples)
{
  if (eps_list.size() < 2)
    throw InvalidInput("measure_eps_gain: need at least two eps values");
  EpsGainReport rep;
  rep.R = R;
  rep.kappa = kappa;
  for (double eps : eps_list)
  {
    const DispersionParams p{eps, kappa};
    PhaseProfile phi(p);
    const double t0 = onset_factor / (phi.d2(R) * R * R);
    const auto times = log_grid(t0, 10.0 * t0, samples);
    const RadialGrid g = radial_grid_for(R, p, times.back());
    DecayFit f = measure_decay(R, p, times, g);
    rep.eps.push_back(eps);
    rep.prefactors.push_back(f.pinned_prefactor);
    rep.fits.push_back(std::move(f));
  }
  const LogLogFit fit = loglog_fit(rep.eps, rep.prefactors);
  rep.delta = fit.slope;
  rep.residual = fit.residual;
  return rep;
}

}  // namespace lowmach
