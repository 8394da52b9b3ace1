// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/spectral/helmholtz.hpp"

namespace lowmach
{

namespace
{

void project(Spectrum &v, bool keep_gradient)
{
  const auto &g = v.grid();
  const int d = g.dim();
  if (d < 2)
    throw InvalidInput("Helmholtz projection needs dim >= 2");
  if (v.components() != d)
    throw InvalidInput("Helmholtz projection needs a vector field");
  AxisTable t = axis_table(g, v.layout());
  for (int a = 0; a < d; a++)
    for (int i = 0; i < t.extent[a]; i++)
      if (t.nyquist[a][i])
        t.k[a][i] = 0.0;

  std::size_t idx = 0;
  for (int i = 0; i < t.extent[0]; i++)
    for (int j = 0; j < t.extent[1]; j++)
      for (int l = 0; l < t.extent[2]; l++, idx++)
      {
        const double k[3] = {t.k[0][i], t.k[1][j], t.k[2][l]};
        const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        cplx dot = 0.0;
        if (k2 > 0.0)
          for (int a = 0; a < d; a++)
            dot += k[a] * v(a, idx);
        for (int a = 0; a < d; a++)
        {
          const cplx q = k2 > 0.0 ? k[a] * dot / k2 : cplx(0.0);
          v(a, idx) = keep_gradient ? q : v(a, idx) - q;
        }
      }
}

}  // namespace

void project_gradient(Spectrum &vec) { project(vec, true); }
void project_solenoidal(Spectrum &vec) { project(vec, false); }

RealField helmholtz_Q(const RealField &vec)
{
  Spectrum s = forward(vec);
  project_gradient(s);
  return inverse_real(s);
}

RealField helmholtz_P(const RealField &vec)
{
  Spectrum s = forward(vec);
  project_solenoidal(s);
  return inverse_real(s);
}

}  // namespace lowmach
