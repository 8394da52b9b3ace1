// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_DISPERSION_OSCILLATORY_HPP
#define LOWMACH_DISPERSION_OSCILLATORY_HPP

#include <complex>

#include "lowmach/dispersion/bogoliubov.hpp"

namespace lowmach
{

//
// I(t, x, R) = int_{R^d} exp(i x.xi + i t phi_eps(|xi|)) chi(|xi| / R) dxi, chi = lp_phi.
// Reduced to the radial integral over [R/2, 2R] against the exact angular kernel
//   d=1: 2 cos(|x| r),  d=2: 2 pi r J0(|x| r),  d=3: 4 pi r^2 sin(|x| r) / (|x| r),
// and integrated by adaptive Gauss-Kronrod. Throws QuadratureError when the absolute
// tolerance is not met.
//
std::complex<double> oscillatory_integral(double t, double x_norm, double R, const DispersionParams &p,
                                          int d, double abs_tol = 1e-9);
std::complex<double> oscillatory_integral(double t, const Wavevector &x, double R,
                                          const DispersionParams &p, int d, double abs_tol = 1e-9);

// Same integral by composite fixed-order Gauss-Legendre on `panels` equal panels, with no
// adaptivity. Used as an independent check on the adaptive rule.
std::complex<double> oscillatory_integral_panels(double t, double x_norm, double R, const DispersionParams &p,
                                                 int d, int panels = 2000);

// Integral of chi(|eta|) over R^d (the t = 0, x = 0 value at R = 1).
double bump_mass(int d);

}  // namespace lowmach

#endif  // LOWMACH_DISPERSION_OSCILLATORY_HPP
