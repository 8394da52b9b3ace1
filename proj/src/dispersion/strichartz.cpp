// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/dispersion/strichartz.hpp"

#include <algorithm>
#include <cmath>

#include "lowmach/fit.hpp"
#include "lowmach/spectral/multiplier.hpp"

namespace lowmach
{

namespace
{

double reciprocal(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

void finish(StrichartzReport &r)
{
  r.max_ratio = *std::max_element(r.ratio.begin(), r.ratio.end());
  if (r.eps.size() >= 2)
    r.trend = loglog_fit(r.eps, r.ratio).slope;
  r.non_increasing = r.trend >= -0.05;
}

void check_probe(const AdmissiblePair &pair, double alpha, std::span<const double> eps_list)
{
  if (!is_admissible(pair))
    throw InvalidInput("strichartz probe: pair is not admissible");
  if (!(alpha >= 0.0))
    throw InvalidInput("strichartz probe: alpha must be nonnegative");
  if (eps_list.empty())
    throw InvalidInput("strichartz probe: empty eps list");
}

}  // namespace

bool is_admissible(double p, double q, int d)
{
  if (d < 1 || d > 3)
    return false;
  if (!(p >= 2.0) || !(q >= 2.0))
    return false;
  if (d == 2 && p == 2.0 && std::isinf(q))
    return false;
  const double lhs = 2.0 * reciprocal(p) + d * reciprocal(q);
  return std::abs(lhs - 0.5 * d) <= 1e-12;
}

double holder_conjugate(double p)
{
  if (!(p >= 1.0))
    throw InvalidInput("holder_conjugate: p must be >= 1");
  if (std::isinf(p))
    return 1.0;
  if (p == 1.0)
    return kInf;
  return p / (p - 1.0);
}

AdmissiblePair admissible_dual(const AdmissiblePair &a)
{
  return {holder_conjugate(a.p), holder_conjugate(a.q), a.d};
}

StrichartzReport strichartz_probe(const RealField &f, double kappa, const AdmissiblePair &pair,
                                  double alpha, std::span<const double> times,
                                  std::span<const double> eps_list)
{
  check_probe(pair, alpha, eps_list);
  StrichartzReport r;
  r.pair = pair;
  r.alpha = alpha;
  const double rhs = besov_norm(f, alpha, 2.0, 2.0);
  const Spectrum base = forward(to_complex(f));
  for (double eps : eps_list)
  {
    const DispersionParams p{eps, kappa};
    std::vector<double> v;
    for (double t : times)
    {
      Spectrum s = base;
      propagate_inplace(s, t, p);
      v.push_back(besov_norm(inverse_complex(s), 0.0, pair.q, 2.0));
    }
    const double lhs = mixed_norm(times, v, pair.p);
    r.eps.push_back(eps);
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    r.ratio.push_back(lhs / (std::pow(eps, alpha) * rhs));
  }
  finish(r);
  return r;
}

ComplexField duhamel_frozen(const RealField &F, double t, const DispersionParams &p)
{
  p.validate();
  return apply_multiplier(F, radial([&](double k) {
                            const double w = omega(k, p);
                            if (w * std::abs(t) < 1e-8)
                              return cplx(t, 0.5 * w * t * t);
                            return (std::polar(1.0, t * w) - 1.0) / cplx(0.0, w);
                          }));
}

StrichartzReport strichartz_probe_duhamel(const RealField &F, double kappa, const AdmissiblePair &pair,
                                          double alpha, std::span<const double> times,
                                          std::span<const double> eps_list)
{
  check_probe(pair, alpha, eps_list);
  if (times.size() < 2)
    throw InvalidInput("strichartz probe: need at least two times");
  StrichartzReport r;
  r.pair = pair;
  r.alpha = alpha;
  const double rhs = (times.back() - times.front()) * besov_norm(F, alpha, 2.0, 2.0);
  for (double eps : eps_list)
  {
    const DispersionParams p{eps, kappa};
    std::vector<double> v;
    for (double t : times)
      v.push_back(besov_norm(duhamel_frozen(F, t - times.front(), p), 0.0, pair.q, 2.0));
    const double lhs = mixed_norm(times, v, pair.p);
    r.eps.push_back(eps);
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    r.ratio.push_back(lhs / (std::pow(eps, alpha) * rhs));
  }
  finish(r);
  return r;
}

}  // namespace lowmach
