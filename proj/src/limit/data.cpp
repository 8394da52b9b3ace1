// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/limit/data.hpp"

#include <cmath>

#include "lowmach/limit/exponents.hpp"
#include "lowmach/spectral/helmholtz.hpp"
#include "lowmach/spectral/norms.hpp"
#include "lowmach/spectral/operators.hpp"

namespace lowmach
{

namespace
{

// Gaussian of width w centred at the box centre plus `shift` (in widths) along each axis.
RealField gaussian(const SpectralGrid &g, double w, std::array<double, 3> shift)
{
  return sample<double>(g, [&](const auto &x) {
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); a++)
    {
      const double y = x[a] - 0.5 * g.length(a) - shift[a] * w;
      r2 += y * y;
    }
    return std::exp(-0.5 * r2 / (w * w));
  });
}

RealField mexican_hat(const SpectralGrid &g, double w)
{
  return sample<double>(g, [&](const auto &x) {
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); a++)
    {
      const double y = x[a] - 0.5 * g.length(a);
      r2 += y * y;
    }
    const double s = r2 / (w * w);
    return (1.0 - s / g.dim()) * std::exp(-0.5 * s);
  });
}

// (-d_y psi, d_x psi, 0): divergence-free in the (x, y) plane for d = 2 or 3.
RealField planar_curl(const RealField &psi)
{
  const RealField gp = gradient(psi);
  RealField u = RealField::vector(psi.grid());
  for (std::size_t n = 0; n < psi.size(); n++)
  {
    u(0, n) = -gp(1, n);
    u(1, n) = gp(0, n);
  }
  return u;
}

}  // namespace

DataKind parse_data_kind(const std::string &s)
{
  if (s == "well_prepared")
    return DataKind::WellPrepared;
  if (s == "ill_prepared")
    return DataKind::IllPrepared;
  throw InvalidInput("unknown data kind '" + s + "' (expected well_prepared or ill_prepared)");
}

std::string to_string(DataKind k) { return k == DataKind::WellPrepared ? "well_prepared" : "ill_prepared"; }

InitialData make_data(DataKind kind, double amplitude, double eps, double gamma, const SpectralGrid &grid,
                      double kappa, double width)
{
  if (grid.dim() < 2)
    throw InvalidInput("make_data: needs d = 2 or 3");
  if (!(eps > 0.0) || !(width > 0.0) || !(amplitude >= 0.0))
    throw InvalidInput("make_data: eps, width must be positive and amplitude nonnegative");
  const double scale = kind == DataKind::IllPrepared ? eps : eps * eps;

  RealField rho = mexican_hat(grid, width);
  for (auto &v : rho.values())
  {
    v = 1.0 + scale * amplitude * v;
    if (!(v > 0.0))
      throw InvalidInput("make_data: density is not positive; lower the amplitude");
  }
  RealField psi = gaussian(grid, width, {0.0, 0.3, 0.0});
  psi *= amplitude * width;
  RealField u = planar_curl(psi);
  const RealField limit = u;
  if (kind == DataKind::IllPrepared)
  {
    RealField chi = gaussian(grid, width, {-0.5, 0.0, 0.0});
    chi *= amplitude * width;
    u += gradient(chi);
  }

  InitialData out{FluidState::from_density_velocity(rho, u), limit, {}};
  FluidParams p;
  p.eps = eps;
  p.gamma = gamma;
  p.kappa = kappa;
  p.nu = std::max(p.nu, 2.0 * kappa);
  const EnergyReport e = total_energy(out.state, p);
  DataReport &r = out.report;
  r.energy = e.total;
  RealField dr = rho;
  for (auto &v : dr.values())
    v -= 1.0;
  r.rho_minus_1_l2 = l2_norm(dr);
  r.grad_sqrt_rho_l2 = l2_norm(gradient(out.state.sqrt_rho));
  r.momentum_l2 = l2_norm(out.state.Lambda);
  r.internal_l1 = e.internal;
  r.limit_energy = 0.5 * std::pow(l2_norm(limit), 2);
  RealField ds = out.state.sqrt_rho;
  for (auto &v : ds.values())
    v -= 1.0;
  for (double pp : {2.0, 3.0, 4.0, 5.0})
  {
    r.sqrt_rho_minus_1_lp.emplace_back(pp, lq_norm(ds, pp));
    r.alpha.emplace_back(pp, alpha_exponent(pp, gamma));
  }
  r.beta = beta_exponent(gamma);
  return out;
}

}  // namespace lowmach
