// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_LIMIT_RATES_HPP
#define LOWMACH_LIMIT_RATES_HPP

#include <span>
#include <string>
#include <vector>

namespace lowmach
{

struct RateFit
{
  double rate = 0.0;
  double residual = 0.0;  // max |log value - fit|
};

// Least-squares slope of log(value) against log(eps). Needs >= 3 positive samples.
RateFit rate_fit(std::span<const double> eps, std::span<const double> values);

//
// Measured norms against a decreasing eps list, one series per norm id.
//
class RateTable
{
public:
  struct Series
  {
    std::string id;
    double p = 0.0, q = 0.0, s = 0.0;  // time exponent, space exponent, smoothness
    std::vector<double> values;
    RateFit fit;
    bool decreasing = false;  // strictly decreasing along the eps list
  };

  RateTable() = default;
  explicit RateTable(std::vector<double> eps_values);

  const std::vector<double> &eps_values() const { return eps_; }
  const std::vector<Series> &series() const { return series_; }
  const Series &at(const std::string &id) const;
  bool has(const std::string &id) const;

  const Series &add(const std::string &id, double p, double q, double s, std::vector<double> values);
  void write_csv(const std::string &path) const;

private:
  std::vector<double> eps_;
  std::vector<Series> series_;
};

}  // namespace lowmach

#endif  // LOWMACH_LIMIT_RATES_HPP
