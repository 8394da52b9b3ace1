// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/limit/exponents.hpp"

#include <cmath>
#include <numeric>

#include "lowmach/error.hpp"

namespace lowmach
{

Rational::Rational(std::int64_t num, std::int64_t den)
{
  if (den == 0)
    throw InvalidInput("rational with zero denominator");
  if (den < 0)
  {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const
{
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational &a, const Rational &b)
{
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational &a, const Rational &b)
{
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational &a, const Rational &b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

Rational operator/(const Rational &a, const Rational &b)
{
  if (b.num_ == 0)
    throw InvalidInput("rational division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

namespace
{

void check_gamma(const Rational &gamma)
{
  if (!(gamma > Rational(1)) || !(gamma < Rational(3)))
    throw InvalidInput("gamma must lie in (1, 3)");
}

// Nearest fraction with a small denominator; exact for the decimal inputs used in configs.
Rational from_double(double x)
{
  constexpr std::int64_t scale = 1000000;
  const double y = x * scale;
  const auto n = static_cast<std::int64_t>(y < 0 ? y - 0.5 : y + 0.5);
  if (std::abs(static_cast<double>(n) - y) > 1e-6)
    throw InvalidInput("exponent input is not a decimal with at most six places");
  return {n, scale};
}

}  // namespace

Rational beta_exponent(const Rational &gamma)
{
  check_gamma(gamma);
  if (gamma < Rational(2))
    return Rational(2) / (Rational(6) - gamma);
  return Rational(1);
}

double beta_exponent(double gamma) { return beta_exponent(from_double(gamma)).value(); }

Rational alpha_exponent(const Rational &p, const Rational &gamma)
{
  check_gamma(gamma);
  if (p < Rational(2) || p > Rational(6))
    throw InvalidInput("alpha_exponent: p must lie in [2, 6)");
  if (gamma < Rational(2))
    return Rational(2) * (Rational(6) - p) / (p * (Rational(6) - gamma));
  return (Rational(6) - p) / (Rational(2) * p);
}

double alpha_exponent(double p, double gamma)
{
  return alpha_exponent(from_double(p), from_double(gamma)).value();
}

}  // namespace lowmach
