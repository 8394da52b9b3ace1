// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_DISPERSION_DECAY_HPP
#define LOWMACH_DISPERSION_DECAY_HPP

#include <span>
#include <vector>

#include "lowmach/dispersion/bogoliubov.hpp"

namespace lowmach
{

struct DecayFit
{
  int d = 3;
  DispersionParams params;
  double R = 1.0;
  std::vector<double> times;
  std::vector<double> sup_values;
  double slope = 0.0;      // least-squares log-log slope
  double prefactor = 0.0;  // exp(intercept) of that fit
  double residual = 0.0;   // max |log deviation| from the fit
  // Geometric mean of sup * t^{d/2}: the prefactor with the slope pinned at -d/2.
  double pinned_prefactor = 0.0;
  double t_min() const { return times.front(); }
  double t_max() const { return times.back(); }
};

// Log-log least squares on (times, values); pinned_prefactor uses exponent -d/2.
DecayFit fit_decay(std::span<const double> times, std::span<const double> values, int d);

// Exact radial reduction of a 3D radial field to an odd 1D profile on [-L/2, L/2).
struct RadialGrid
{
  int points = 1 << 16;
  double length = 1000.0;
};

//
// Initial datum: the shell projection of a unit point mass at the origin, i.e. spectrum
// chi(|xi|/R) / volume, so the evolved field is (2 pi)^{-d} I(t, x, R). Sup norms are taken
// over grid nodes.
//
// Throws UnderResolved when some requested time exceeds first_unsafe_time().
DecayFit measure_decay(double R, const DispersionParams &p, std::span<const double> times,
                       const SpectralGrid &grid);
DecayFit measure_decay(double R, const DispersionParams &p, std::span<const double> times,
                       const RadialGrid &grid);

// Earliest time at which the packet (bulk group speed phi'(1.8 R), launched with
// half-width pi/R) reaches half the box.
double first_unsafe_time(double R, const DispersionParams &p, double box_length);

// Sup norm of the evolved datum at a single time, on either backend.
double decay_sup(double R, const DispersionParams &p, double t, const SpectralGrid &grid);
double decay_sup(double R, const DispersionParams &p, double t, const RadialGrid &grid);

struct EpsGainReport
{
  double R = 0.1;
  double kappa = 1.0;
  std::vector<double> eps;
  std::vector<DecayFit> fits;
  std::vector<double> prefactors;  // pinned prefactors
  double delta = 0.0;              // fitted exponent of prefactor ~ eps^delta
  double residual = 0.0;
};

//
// Low-shell eps sweep for d = 3 on the radial backend. Each eps is observed on its own
// asymptotic window [T, 10 T] with T = onset_factor / (phi_eps''(R) R^2): the stationary
// phase regime sets in only once t phi'' R^2 is large, and that scale grows like 1/eps.
//
EpsGainReport measure_eps_gain(double R, double kappa, std::span<const double> eps_list,
                               double onset_factor = 30.0, int samples = 8);

// Box and resolution for the radial backend covering [0, t_max] for shell R.
RadialGrid radial_grid_for(double R, const DispersionParams &p, double t_max);

}  // namespace lowmach

#endif  // LOWMACH_DISPERSION_DECAY_HPP
