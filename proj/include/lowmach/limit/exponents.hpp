// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_LIMIT_EXPONENTS_HPP
#define LOWMACH_LIMIT_EXPONENTS_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace lowmach
{

// Exact fraction num/den in lowest terms, den > 0.
class Rational
{
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator/(const Rational &a, const Rational &b);
  friend bool operator==(const Rational &a, const Rational &b) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// beta = 2/(6 - gamma) for gamma < 2, 1 otherwise. gamma in (1, 3).
Rational beta_exponent(const Rational &gamma);
double beta_exponent(double gamma);

// alpha(p) = 2(6 - p)/(p(6 - gamma)) for gamma < 2, (6 - p)/(2p) otherwise. p in [2, 6]; the
// endpoint p = 6 is the limit query alpha = 0.
Rational alpha_exponent(const Rational &p, const Rational &gamma);
double alpha_exponent(double p, double gamma);

}  // namespace lowmach

#endif  // LOWMACH_LIMIT_EXPONENTS_HPP
