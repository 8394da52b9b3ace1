// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/limit/rates.hpp"

#include "lowmach/error.hpp"
#include "lowmach/fit.hpp"
#include "lowmach/io/csv.hpp"

namespace lowmach
{

RateFit rate_fit(std::span<const double> eps, std::span<const double> values)
{
  if (eps.size() != values.size() || eps.size() < 3)
    throw InvalidInput("rate_fit: need at least three (eps, value) samples");
  const LogLogFit f = loglog_fit(eps, values);
  return {f.slope, f.residual};
}

RateTable::RateTable(std::vector<double> eps_values) : eps_(std::move(eps_values))
{
  if (eps_.size() < 3)
    throw InvalidInput("rate table: need at least three eps samples");
  for (std::size_t i = 0; i < eps_.size(); i++)
  {
    if (!(eps_[i] > 0.0))
      throw InvalidInput("rate table: eps values must be positive");
    if (i > 0 && !(eps_[i] < eps_[i - 1]))
      throw InvalidInput("rate table: eps values must decrease");
  }
}

const RateTable::Series &RateTable::at(const std::string &id) const
{
  for (const auto &s : series_)
    if (s.id == id)
      return s;
  throw InvalidInput("rate table: unknown norm id " + id);
}

bool RateTable::has(const std::string &id) const
{
  for (const auto &s : series_)
    if (s.id == id)
      return true;
  return false;
}

const RateTable::Series &RateTable::add(const std::string &id, double p, double q, double s,
                                        std::vector<double> values)
{
  if (values.size() != eps_.size())
    throw InvalidInput("rate table: one value per eps expected");
  if (has(id))
    throw InvalidInput("rate table: duplicate norm id " + id);
  Series ser{id, p, q, s, std::move(values), {}, true};
  ser.fit = rate_fit(eps_, ser.values);
  for (std::size_t i = 1; i < ser.values.size(); i++)
    if (!(ser.values[i] < ser.values[i - 1]))
      ser.decreasing = false;
  series_.push_back(std::move(ser));
  return series_.back();
}

void RateTable::write_csv(const std::string &path) const
{
  CsvWriter w(path, {"norm_id", "p", "q", "s", "eps", "value", "fitted_rate", "residual"});
  for (const auto &ser : series_)
    for (std::size_t i = 0; i < eps_.size(); i++)
      w.row({ser.id, ser.p, ser.q, ser.s, eps_[i], ser.values[i], ser.fit.rate, ser.fit.residual});
}

}  // namespace lowmach
