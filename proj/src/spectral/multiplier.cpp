// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/spectral/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lowmach
{

namespace
{

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string describe(const Wavevector &xi)
{
  std::ostringstream os;
  os << "(" << xi[0] << ", " << xi[1] << ", " << xi[2] << ")";
  return os.str();
}

// Average of the symbol over the sign choices of the Nyquist components of xi.
cplx nyquist_average(const SpectralGrid &g, const Symbol &symbol, const Wavevector &xi)
{
  int axes[3];
  int m = 0;
  for (int a = 0; a < g.dim(); a++)
    if (std::abs(std::abs(xi[a]) - std::numbers::pi * g.points(a) / g.length(a)) <
        1e-9 * g.fundamental(a))
      axes[m++] = a;
  cplx acc = 0.0;
  for (int mask = 0; mask < (1 << m); mask++)
  {
    Wavevector x = xi;
    for (int b = 0; b < m; b++)
      if (mask & (1 << b))
        x[axes[b]] = -x[axes[b]];
    acc += symbol(x);
  }
  return acc / static_cast<double>(1 << m);
}

}  // namespace

void multiply(Spectrum &s, const Symbol &symbol, ZeroMode zero)
{
  const auto &g = s.grid();
  const bool half = s.layout() == Layout::Half;
  const int nc = s.components();
  for_each_mode(g, s.layout(), [&](std::size_t i, const Wavevector &xi, bool nyq) {
    cplx m;
    if (i == 0)
    {
      // Index 0 is xi = 0 in both layouts.
      if (zero == ZeroMode::Zero)
        m = 0.0;
      else if (zero == ZeroMode::Identity)
        m = 1.0;
      else
      {
        m = symbol(xi);
        if (!finite(m))
          throw InvalidInput("symbol is singular at the zero mode and no zero-mode rule was declared");
      }
    }
    else
    {
      m = (half && nyq) ? nyquist_average(g, symbol, xi) : symbol(xi);
      if (!finite(m))
        throw InvalidInput("symbol is not finite at xi = " + describe(xi));
    }
    for (int c = 0; c < nc; c++)
      s(c, i) *= m;
  });
}

ComplexField apply_multiplier(const ComplexField &f, const Symbol &symbol, ZeroMode zero)
{
  Spectrum s = forward(f);
  multiply(s, symbol, zero);
  return inverse_complex(s);
}

ComplexField apply_multiplier(const RealField &f, const Symbol &symbol, ZeroMode zero)
{
  return apply_multiplier(to_complex(f), symbol, zero);
}

RealField apply_real_multiplier(const RealField &f, const Symbol &symbol, ZeroMode zero)
{
  Spectrum s = forward(f);
  multiply(s, symbol, zero);
  return inverse_real(s);
}

Symbol radial(std::function<cplx(double)> fn)
{
  return [fn = std::move(fn)](const Wavevector &xi) { return fn(std::sqrt(norm2(xi))); };
}

}  // namespace lowmach
