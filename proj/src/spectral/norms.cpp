// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/spectral/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "lowmach/spectral/littlewood_paley.hpp"

namespace lowmach
{

namespace
{

void check_exponent(double v, const char *name)
{
  if (!(v >= 1.0))
    throw InvalidInput(std::string(name) + " must lie in [1, inf]");
}

template <typename T>
double lq_impl(const Field<T> &f, double q)
{
  check_exponent(q, "q");
  const std::size_t n = f.size();
  double acc = 0.0;
  double mx = 0.0;
  for (std::size_t i = 0; i < n; i++)
  {
    double m2 = 0.0;
    for (int c = 0; c < f.components(); c++)
      m2 += std::norm(f(c, i));
    if (std::isinf(q))
      mx = std::max(mx, m2);
    else if (q == 2.0)
      acc += m2;
    else
      acc += std::pow(m2, 0.5 * q);
  }
  if (std::isinf(q))
    return std::sqrt(mx);
  return std::pow(acc * f.grid().cell_volume(), 1.0 / q);
}

// Parseval over all components.
double spectral_l2(const Spectrum &s, const std::function<double(double)> &w)
{
  double acc = 0.0;
  for (int c = 0; c < s.components(); c++)
    acc += weighted_power(s, c, [&](const Wavevector &xi) { return w(norm2(xi)); });
  return std::sqrt(acc * s.grid().volume());
}

template <typename T>
double besov_impl(const Field<T> &f, double s, double q, double r)
{
  check_exponent(q, "q");
  check_exponent(r, "r");
  const Spectrum base = forward(f);
  const int top = lp_top_shell(f.grid());
  std::vector<double> terms;
  auto block_norm = [&](Spectrum &blk) {
    if (q == 2.0)
      return spectral_l2(blk, [](double) { return 1.0; });
    if constexpr (std::is_same_v<T, double>)
      return lq_norm(inverse_real(blk), q);
    else
      return lq_norm(inverse_complex(blk), q);
  };
  {
    Spectrum low = base;
    lp_low_inplace(low, 0.5);
    terms.push_back(std::pow(2.0, -s) * block_norm(low));
  }
  for (int j = 0; j <= top; j++)
  {
    Spectrum blk = base;
    lp_shell_inplace(blk, FrequencyShell{j});
    terms.push_back(std::pow(2.0, j * s) * block_norm(blk));
  }
  if (std::isinf(r))
    return *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms)
    acc += std::pow(t, r);
  return std::pow(acc, 1.0 / r);
}

template <typename T>
double spatial_impl(const Field<T> &f, const NormSpec &spec)
{
  switch (spec.kind)
  {
  case NormSpec::Kind::Lebesgue:
    return lq_norm(f, spec.q);
  case NormSpec::Kind::Sobolev:
    return sobolev_norm(f, spec.s);
  case NormSpec::Kind::Besov:
    return besov_norm(f, spec.s, spec.q, spec.r);
  }
  return 0.0;
}

template <typename T>
double mixed_impl(const Trajectory<T> &traj, double p, const NormSpec &spatial)
{
  if (traj.times.size() != traj.frames.size())
    throw InvalidInput("trajectory times and frames differ in length");
  std::vector<double> v;
  v.reserve(traj.frames.size());
  for (const auto &fr : traj.frames)
    v.push_back(spatial_impl(fr, spatial));
  return mixed_norm(traj.times, v, p);
}

}  // namespace

double lq_norm(const RealField &f, double q) { return lq_impl(f, q); }
double lq_norm(const ComplexField &f, double q) { return lq_impl(f, q); }
double l2_norm(const RealField &f) { return lq_impl(f, 2.0); }
double l2_norm(const ComplexField &f) { return lq_impl(f, 2.0); }

double sobolev_norm(const Spectrum &f, double s)
{
  return spectral_l2(f, [s](double k2) { return std::pow(1.0 + k2, s); });
}
double sobolev_norm(const RealField &f, double s) { return sobolev_norm(forward(f), s); }
double sobolev_norm(const ComplexField &f, double s) { return sobolev_norm(forward(f), s); }

double besov_norm(const RealField &f, double s, double q, double r) { return besov_impl(f, s, q, r); }
double besov_norm(const ComplexField &f, double s, double q, double r) { return besov_impl(f, s, q, r); }

std::string NormSpec::tag() const
{
  std::ostringstream os;
  switch (kind)
  {
  case Kind::Lebesgue:
    os << "L" << q;
    break;
  case Kind::Sobolev:
    os << "H" << s;
    break;
  case Kind::Besov:
    os << "B" << s << "_" << q << "_" << r;
    break;
  }
  return os.str();
}

double spatial_norm(const RealField &f, const NormSpec &spec) { return spatial_impl(f, spec); }
double spatial_norm(const ComplexField &f, const NormSpec &spec) { return spatial_impl(f, spec); }

double mixed_norm(std::span<const double> times, std::span<const double> values, double p)
{
  check_exponent(p, "p");
  if (times.size() != values.size() || times.empty())
    throw InvalidInput("mixed_norm: times and values must be non-empty and equal in length");
  if (std::isinf(p))
    return *std::max_element(values.begin(), values.end());
  if (times.size() < 2)
    throw InvalidInput("mixed_norm: a finite time exponent needs at least two samples");
  const double dt = times[1] - times[0];
  if (!(dt > 0.0))
    throw InvalidInput("mixed_norm: times must increase");
  for (std::size_t i = 1; i < times.size(); i++)
    if (std::abs((times[i] - times[i - 1]) - dt) > 1e-9 * dt)
      throw InvalidInput("mixed_norm: time grid is not uniform");
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); i++)
  {
    const double w = (i == 0 || i + 1 == values.size()) ? 0.5 : 1.0;
    acc += w * std::pow(values[i], p);
  }
  return std::pow(acc * dt, 1.0 / p);
}

double mixed_norm(const Trajectory<double> &traj, double p, const NormSpec &spatial)
{
  return mixed_impl(traj, p, spatial);
}
double mixed_norm(const Trajectory<cplx> &traj, double p, const NormSpec &spatial)
{
  return mixed_impl(traj, p, spatial);
}

}  // namespace lowmach
