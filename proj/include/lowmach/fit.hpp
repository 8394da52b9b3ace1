// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_FIT_HPP
#define LOWMACH_FIT_HPP

#include <algorithm>
#include <cmath>
#include <span>

#include "lowmach/error.hpp"

namespace lowmach
{

struct LogLogFit
{
  double slope = 0.0;
  double intercept = 0.0;  // log of the prefactor
  double residual = 0.0;   // max |log y - fit|
};

// Least squares of log y against log x. Needs >= 2 points, all positive.
inline LogLogFit loglog_fit(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidInput("loglog_fit: need at least two (x, y) pairs");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); i++)
  {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw InvalidInput("loglog_fit: values must be positive");
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); i++)
  {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (!(sxx > 0.0))
    throw InvalidInput("loglog_fit: abscissae must not all coincide");
  LogLogFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < x.size(); i++)
    f.residual =
      std::max(f.residual, std::abs(std::log(y[i]) - (f.intercept + f.slope * std::log(x[i]))));
  return f;
}

}  // namespace lowmach

#endif  // LOWMACH_FIT_HPP
