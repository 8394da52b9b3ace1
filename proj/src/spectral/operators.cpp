// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/spectral/operators.hpp"

#include <cmath>

namespace lowmach
{

namespace
{

template <typename Fn>
void for_each_index(const AxisTable &t, Fn &&fn)
{
  std::size_t idx = 0;
  for (int i = 0; i < t.extent[0]; i++)
    for (int j = 0; j < t.extent[1]; j++)
      for (int l = 0; l < t.extent[2]; l++, idx++)
        fn(idx, i, j, l);
}

void require_components(const Spectrum &s, int n, const char *what)
{
  if (s.components() != n)
    throw InvalidInput(std::string(what) + ": wrong number of components");
}

}  // namespace

AxisTable derivative_table(const SpectralGrid &g, Layout layout)
{
  AxisTable t = axis_table(g, layout);
  for (int a = 0; a < g.dim(); a++)
    for (int i = 0; i < t.extent[a]; i++)
      if (t.nyquist[a][i])
        t.k[a][i] = 0.0;
  return t;
}

Spectrum partial(const Spectrum &s, int axis)
{
  const auto &g = s.grid();
  if (axis < 0 || axis >= g.dim())
    throw InvalidInput("partial: axis out of range");
  const AxisTable t = derivative_table(g, s.layout());
  Spectrum out(g, s.components(), s.layout());
  const auto &k = t.k[axis];
  for (int c = 0; c < s.components(); c++)
  {
    auto in = s.component(c);
    auto o = out.component(c);
    for_each_index(t, [&](std::size_t idx, int i, int j, int l) {
      const int ia[3] = {i, j, l};
      o[idx] = cplx(0.0, k[ia[axis]]) * in[idx];
    });
  }
  return out;
}

Spectrum gradient(const Spectrum &scalar)
{
  require_components(scalar, 1, "gradient");
  const auto &g = scalar.grid();
  const AxisTable t = derivative_table(g, scalar.layout());
  Spectrum out(g, g.dim(), scalar.layout());
  auto in = scalar.component(0);
  for_each_index(t, [&](std::size_t idx, int i, int j, int l) {
    const double kk[3] = {t.k[0][i], t.k[1][j], t.k[2][l]};
    for (int a = 0; a < g.dim(); a++)
      out(a, idx) = cplx(0.0, kk[a]) * in[idx];
  });
  return out;
}

Spectrum divergence(const Spectrum &vec)
{
  const auto &g = vec.grid();
  require_components(vec, g.dim(), "divergence");
  const AxisTable t = derivative_table(g, vec.layout());
  Spectrum out(g, 1, vec.layout());
  for_each_index(t, [&](std::size_t idx, int i, int j, int l) {
    const double kk[3] = {t.k[0][i], t.k[1][j], t.k[2][l]};
    cplx acc = 0.0;
    for (int a = 0; a < g.dim(); a++)
      acc += cplx(0.0, kk[a]) * vec(a, idx);
    out(0, idx) = acc;
  });
  return out;
}

Spectrum laplacian(const Spectrum &s)
{
  const auto &g = s.grid();
  const AxisTable t = axis_table(g, s.layout());
  Spectrum out(g, s.components(), s.layout());
  for_each_index(t, [&](std::size_t idx, int i, int j, int l) {
    const double k2 = t.k[0][i] * t.k[0][i] + t.k[1][j] * t.k[1][j] + t.k[2][l] * t.k[2][l];
    for (int c = 0; c < s.components(); c++)
      out(c, idx) = -k2 * s(c, idx);
  });
  return out;
}

Spectrum jacobian(const Spectrum &vec)
{
  const auto &g = vec.grid();
  const int d = g.dim();
  require_components(vec, d, "jacobian");
  const AxisTable t = derivative_table(g, vec.layout());
  Spectrum out(g, d * d, vec.layout());
  for_each_index(t, [&](std::size_t idx, int i, int j, int l) {
    const double kk[3] = {t.k[0][i], t.k[1][j], t.k[2][l]};
    for (int a = 0; a < d; a++)
      for (int b = 0; b < d; b++)
        out(a * d + b, idx) = cplx(0.0, kk[a]) * vec(b, idx);
  });
  return out;
}

Spectrum tensor_divergence(const Spectrum &tensor)
{
  const auto &g = tensor.grid();
  const int d = g.dim();
  require_components(tensor, d * d, "tensor_divergence");
  const AxisTable t = derivative_table(g, tensor.layout());
  Spectrum out(g, d, tensor.layout());
  for_each_index(t, [&](std::size_t idx, int i, int j, int l) {
    const double kk[3] = {t.k[0][i], t.k[1][j], t.k[2][l]};
    for (int b = 0; b < d; b++)
    {
      cplx acc = 0.0;
      for (int a = 0; a < d; a++)
        acc += cplx(0.0, kk[a]) * tensor(a * d + b, idx);
      out(b, idx) = acc;
    }
  });
  return out;
}

void dealias(Spectrum &s)
{
  const auto &g = s.grid();
  const AxisTable t = axis_table(g, s.layout());
  std::array<std::vector<char>, 3> keep;
  for (int a = 0; a < 3; a++)
  {
    keep[a].assign(t.extent[a], 1);
    if (a >= g.dim())
      continue;
    for (int i = 0; i < t.extent[a]; i++)
      keep[a][i] = 3 * std::abs(g.lattice_index(a, i)) <= g.points(a) ? 1 : 0;
  }
  for_each_index(t, [&](std::size_t idx, int i, int j, int l) {
    if (keep[0][i] && keep[1][j] && keep[2][l])
      return;
    for (int c = 0; c < s.components(); c++)
      s(c, idx) = 0.0;
  });
}

RealField gradient(const RealField &scalar) { return inverse_real(gradient(forward(scalar))); }
RealField divergence(const RealField &vec) { return inverse_real(divergence(forward(vec))); }
RealField laplacian(const RealField &f) { return inverse_real(laplacian(forward(f))); }
RealField jacobian(const RealField &vec) { return inverse_real(jacobian(forward(vec))); }
RealField tensor_divergence(const RealField &tensor)
{
  return inverse_real(tensor_divergence(forward(tensor)));
}

RealField magnitude(const RealField &vec)
{
  RealField out = RealField::scalar(vec.grid());
  for (std::size_t i = 0; i < vec.size(); i++)
  {
    double s = 0.0;
    for (int c = 0; c < vec.components(); c++)
      s += vec(c, i) * vec(c, i);
    out(0, i) = std::sqrt(s);
  }
  return out;
}

double integral(const RealField &scalar)
{
  double s = 0.0;
  for (double v : scalar.component(0))
    s += v;
  return s * scalar.grid().cell_volume();
}

double mean(const RealField &scalar) { return integral(scalar) / scalar.grid().volume(); }

RealField symmetric_part(const RealField &tensor)
{
  const int d = tensor.grid().dim();
  if (tensor.components() != d * d)
    throw InvalidInput("symmetric_part needs a tensor field");
  RealField out = RealField::tensor(tensor.grid());
  for (int a = 0; a < d; a++)
    for (int b = 0; b < d; b++)
      for (std::size_t i = 0; i < tensor.size(); i++)
        out(a * d + b, i) = 0.5 * (tensor(a * d + b, i) + tensor(b * d + a, i));
  return out;
}

}  // namespace lowmach
