// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_SPECTRAL_LITTLEWOOD_PALEY_HPP
#define LOWMACH_SPECTRAL_LITTLEWOOD_PALEY_HPP

#include <cmath>

#include "lowmach/spectral/spectrum.hpp"

namespace lowmach
{

//
// Dyadic bump. With f(x) = exp(-1/x) for x > 0 (0 otherwise) and
// S(x) = f(x) / (f(x) + f(1-x)), the low-pass profile is psi(r) = S(2 - r): it equals 1 on
// [0,1], vanishes for r >= 2 and is C-infinity. The shell profile is
// phi(r) = psi(r) - psi(2r), supported in [1/2, 2] with phi(1) = 1. Shell j uses
// phi(|xi| / 2^j), the low block psi(2|xi|), and the sum of the low block with shells
// 0..J telescopes to psi(|xi| / 2^J).
//
double lp_psi(double r);
double lp_phi(double r);

struct FrequencyShell
{
  int j = 0;
  double lower() const { return std::ldexp(1.0, j - 1); }
  double upper() const { return std::ldexp(1.0, j + 1); }
};

template <typename T>
struct LPResult
{
  Field<T> field;
  bool empty = false;  // no lattice mode inside the open band
};

LPResult<double> lp_project(const RealField &f, FrequencyShell shell);
LPResult<cplx> lp_project(const ComplexField &f, FrequencyShell shell);
// Smooth cutoff psi(|xi| / cutoff).
RealField lp_lowpass(const RealField &f, double cutoff);
ComplexField lp_lowpass(const ComplexField &f, double cutoff);

// Spectral-level versions (used by the Besov norm).
void lp_shell_inplace(Spectrum &s, FrequencyShell shell);
void lp_low_inplace(Spectrum &s, double cutoff);
bool shell_is_empty(const SpectralGrid &g, FrequencyShell shell);

// Highest shell index needed so that shells 0..J plus the low block cover the lattice.
int lp_top_shell(const SpectralGrid &g);

}  // namespace lowmach

#endif  // LOWMACH_SPECTRAL_LITTLEWOOD_PALEY_HPP
