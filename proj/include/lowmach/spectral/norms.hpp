// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_SPECTRAL_NORMS_HPP
#define LOWMACH_SPECTRAL_NORMS_HPP

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lowmach/spectral/spectrum.hpp"

namespace lowmach
{

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Vector and tensor fields are measured through their pointwise Euclidean magnitude.
double lq_norm(const RealField &f, double q);
double lq_norm(const ComplexField &f, double q);
double l2_norm(const RealField &f);
double l2_norm(const ComplexField &f);

// (sum (1+|xi|^2)^s |c_k|^2 V)^{1/2}.
double sobolev_norm(const RealField &f, double s);
double sobolev_norm(const ComplexField &f, double s);
double sobolev_norm(const Spectrum &f, double s);

// Non-homogeneous Besov norm: l^r over blocks j = -1 (low block psi(2|xi|), weight 2^{-s})
// and shells j = 0..J of 2^{js} ||Delta_j f||_{L^q}.
double besov_norm(const RealField &f, double s, double q, double r);
double besov_norm(const ComplexField &f, double s, double q, double r);

struct NormSpec
{
  enum class Kind
  {
    Lebesgue,
    Sobolev,
    Besov
  };
  Kind kind = Kind::Lebesgue;
  double s = 0.0, q = 2.0, r = 2.0;

  static NormSpec lebesgue(double q) { return {Kind::Lebesgue, 0.0, q, 2.0}; }
  static NormSpec sobolev(double s) { return {Kind::Sobolev, s, 2.0, 2.0}; }
  static NormSpec besov(double s, double q, double r) { return {Kind::Besov, s, q, r}; }
  std::string tag() const;
};

double spatial_norm(const RealField &f, const NormSpec &spec);
double spatial_norm(const ComplexField &f, const NormSpec &spec);

template <typename T>
struct Trajectory
{
  std::vector<double> times;
  std::vector<Field<T>> frames;
};

// (int_t v(t)^p dt)^{1/p} by the trapezoidal rule on a uniform grid; max for p = inf.
double mixed_norm(std::span<const double> times, std::span<const double> values, double p);
double mixed_norm(const Trajectory<double> &traj, double p, const NormSpec &spatial);
double mixed_norm(const Trajectory<cplx> &traj, double p, const NormSpec &spatial);

}  // namespace lowmach

#endif  // LOWMACH_SPECTRAL_NORMS_HPP
