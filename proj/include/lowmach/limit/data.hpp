// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_LIMIT_DATA_HPP
#define LOWMACH_LIMIT_DATA_HPP

#include <string>
#include <utility>
#include <vector>

#include "lowmach/qns/fluid.hpp"

namespace lowmach
{

enum class DataKind
{
  WellPrepared,
  IllPrepared
};

DataKind parse_data_kind(const std::string &s);
std::string to_string(DataKind k);

struct DataReport
{
  double energy = 0.0;               // E(0) with the given kappa
  double rho_minus_1_l2 = 0.0;       // ||rho0 - 1||_{L^2}
  double grad_sqrt_rho_l2 = 0.0;     // ||grad sqrt(rho0)||_{L^2}
  double momentum_l2 = 0.0;          // ||sqrt(rho0) u0||_{L^2}
  double internal_l1 = 0.0;          // ||pi_eps(rho0)||_{L^1}
  double limit_energy = 0.0;         // ||P u0||^2 / 2
  std::vector<std::pair<double, double>> sqrt_rho_minus_1_lp;  // (p, ||sqrt(rho0) - 1||_{L^p})
  double beta = 0.0;                 // predicted rate of rho0 - 1 in L^2
  std::vector<std::pair<double, double>> alpha;  // (p, alpha(p))
};

struct InitialData
{
  FluidState state;
  RealField limit_velocity;  // P(u0), the limit datum
  DataReport report;
};

//
// Gaussian-built profiles of width `width` around the box centre (d = 2 or 3):
// ill-prepared rho = 1 + eps a h, u = a (curl psi + grad chi); well-prepared rho = 1 + eps^2 a h,
// u = a curl psi. h is a mean-zero Mexican hat, psi and chi offset Gaussians. Velocities are
// built with spectral derivatives so curl psi is discretely divergence-free.
//
InitialData make_data(DataKind kind, double amplitude, double eps, double gamma, const SpectralGrid &grid,
                      double kappa = 0.05, double width = 1.0);

}  // namespace lowmach

#endif  // LOWMACH_LIMIT_DATA_HPP
