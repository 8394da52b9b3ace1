// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_SPECTRAL_HELMHOLTZ_HPP
#define LOWMACH_SPECTRAL_HELMHOLTZ_HPP

#include "lowmach/spectral/spectrum.hpp"

namespace lowmach
{

// Gradient part Q = grad Laplacian^{-1} div with symbol xi xi^T/|xi|^2 (zero mode -> 0),
// and solenoidal part P = I - Q. Both need dim >= 2. The wavevector used is the
// derivative one (Nyquist entries zeroed), so P and Q stay exact complementary projectors.
void project_gradient(Spectrum &vec);
void project_solenoidal(Spectrum &vec);

RealField helmholtz_Q(const RealField &vec);
RealField helmholtz_P(const RealField &vec);

}  // namespace lowmach

#endif  // LOWMACH_SPECTRAL_HELMHOLTZ_HPP
