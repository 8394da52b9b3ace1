// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_SPECTRAL_MULTIPLIER_HPP
#define LOWMACH_SPECTRAL_MULTIPLIER_HPP

#include <functional>

#include "lowmach/spectral/spectrum.hpp"

namespace lowmach
{

using Symbol = std::function<cplx(const Wavevector &)>;

// What happens at xi = 0.
enum class ZeroMode
{
  Evaluate,  // no rule declared: the symbol must be finite at 0
  Zero,      // mode mapped to zero (inverse Laplacian and friends)
  Identity   // mode passed through unchanged
};

// Multiplies every component of s in place. Throws InvalidInput on non-finite symbol values.
// For Half layouts the symbol is averaged over the +-N/2 representatives of Nyquist axes,
// so Hermitian symbols keep real fields real (odd symbols vanish there).
void multiply(Spectrum &s, const Symbol &symbol, ZeroMode zero = ZeroMode::Evaluate);

ComplexField apply_multiplier(const ComplexField &f, const Symbol &symbol,
                              ZeroMode zero = ZeroMode::Evaluate);
// General symbol on real input; the result is complex.
ComplexField apply_multiplier(const RealField &f, const Symbol &symbol,
                              ZeroMode zero = ZeroMode::Evaluate);
// Hermitian symbol (s(-xi) = conj s(xi)) on real input; the result stays real.
RealField apply_real_multiplier(const RealField &f, const Symbol &symbol,
                                ZeroMode zero = ZeroMode::Evaluate);

// Radial symbols, the common case.
Symbol radial(std::function<cplx(double)> fn);

}  // namespace lowmach

#endif  // LOWMACH_SPECTRAL_MULTIPLIER_HPP
