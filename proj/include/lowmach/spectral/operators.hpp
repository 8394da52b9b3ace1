// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef LOWMACH_SPECTRAL_OPERATORS_HPP
#define LOWMACH_SPECTRAL_OPERATORS_HPP

#include "lowmach/spectral/spectrum.hpp"

namespace lowmach
{

// Spectral differential operators. First derivatives use i*xi with the Nyquist entry of
// the differentiated axis set to zero; the Laplacian uses -|xi|^2 on the full lattice.

// Derivative wavenumbers: lattice values with the Nyquist entry zeroed, so odd multipliers
// map real fields to real fields.
AxisTable derivative_table(const SpectralGrid &g, Layout layout);

template <typename Fn>
void for_each_derivative_mode(const SpectralGrid &g, Layout layout, Fn &&fn)
{
  const AxisTable t = derivative_table(g, layout);
  std::size_t idx = 0;
  for (int i = 0; i < t.extent[0]; i++)
    for (int j = 0; j < t.extent[1]; j++)
      for (int l = 0; l < t.extent[2]; l++, idx++)
        fn(idx, Wavevector{t.k[0][i], t.k[1][j], t.k[2][l]});
}

Spectrum partial(const Spectrum &s, int axis);
Spectrum gradient(const Spectrum &scalar);
Spectrum divergence(const Spectrum &vec);
Spectrum laplacian(const Spectrum &s);
// (grad v)_{ij} = d_i v_j, stored at component i*dim + j.
Spectrum jacobian(const Spectrum &vec);
// (div T)_j = sum_i d_i T_{ij}.
Spectrum tensor_divergence(const Spectrum &tensor);

// 2/3 rule: zero every mode with |k_a| > N_a/3 on some axis.
void dealias(Spectrum &s);

RealField gradient(const RealField &scalar);
RealField divergence(const RealField &vec);
RealField laplacian(const RealField &f);
RealField jacobian(const RealField &vec);
RealField tensor_divergence(const RealField &tensor);

// Pointwise helpers on real fields.
RealField magnitude(const RealField &vec);
double integral(const RealField &scalar);
double mean(const RealField &scalar);
// Symmetric part of a tensor field.
RealField symmetric_part(const RealField &tensor);

}  // namespace lowmach

#endif  // LOWMACH_SPECTRAL_OPERATORS_HPP
