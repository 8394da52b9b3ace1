// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lowmach/dispersion/oscillatory.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "lowmach/spectral/littlewood_paley.hpp"

namespace lowmach
{

namespace
{

constexpr std::size_t kWorkspace = 20000;

void silence_gsl()
{
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct Integrand
{
  double t, x, R;
  int d;
  bool imag;
  const PhaseProfile *phi;
};

double kernel(double x, double r, int d)
{
  const double s = x * r;
  switch (d)
  {
  case 1:
    return 2.0 * std::cos(s);
  case 2:
    return 2.0 * std::numbers::pi * r * gsl_sf_bessel_J0(s);
  default:
    return 4.0 * std::numbers::pi * r * r * (s == 0.0 ? 1.0 : std::sin(s) / s);
  }
}

double eval(double r, void *params)
{
  const auto *in = static_cast<const Integrand *>(params);
  const double w = lp_phi(r / in->R) * kernel(in->x, r, in->d);
  const double ph = in->t * in->phi->value(r);
  return w * (in->imag ? std::sin(ph) : std::cos(ph));
}

double integrate_part(Integrand in, double tol)
{
  std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
    gsl_integration_workspace_alloc(kWorkspace), &gsl_integration_workspace_free);
  gsl_function fn;
  fn.function = &eval;
  fn.params = &in;
  double result = 0.0, abserr = 0.0;
  const int status = gsl_integration_qag(&fn, 0.5 * in.R, 2.0 * in.R, tol, 0.0, kWorkspace,
                                         GSL_INTEG_GAUSS61, ws.get(), &result, &abserr);
  if (status != GSL_SUCCESS || abserr > tol)
    throw QuadratureError("oscillatory integral did not converge (" + std::string(gsl_strerror(status)) +
                            ")",
                          abserr);
  return result;
}

}  // namespace

std::complex<double> oscillatory_integral(double t, double x_norm, double R, const DispersionParams &p,
                                          int d, double abs_tol)
{
  if (d < 1 || d > 3)
    throw InvalidInput("oscillatory_integral: d must be 1, 2 or 3");
  if (!(R > 0.0))
    throw InvalidInput("oscillatory_integral: R must be positive");
  if (!(abs_tol > 0.0))
    throw InvalidInput("oscillatory_integral: tolerance must be positive");
  silence_gsl();
  PhaseProfile phi(p);
  Integrand in{t, std::abs(x_norm), R, d, false, &phi};
  const double re = integrate_part(in, 0.5 * abs_tol);
  in.imag = true;
  const double im = integrate_part(in, 0.5 * abs_tol);
  return {re, im};
}

std::complex<double> oscillatory_integral(double t, const Wavevector &x, double R,
                                          const DispersionParams &p, int d, double abs_tol)
{
  return oscillatory_integral(t, std::sqrt(norm2(x)), R, p, d, abs_tol);
}

std::complex<double> oscillatory_integral_panels(double t, double x_norm, double R, const DispersionParams &p,
                                                 int d, int panels)
{
  if (d < 1 || d > 3)
    throw InvalidInput("oscillatory_integral_panels: d must be 1, 2 or 3");
  if (!(R > 0.0) || panels < 1)
    throw InvalidInput("oscillatory_integral_panels: R and panels must be positive");
  p.validate();
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> tab(
    gsl_integration_glfixed_table_alloc(20), &gsl_integration_glfixed_table_free);
  const double a = 0.5 * R, w = 1.5 * R / panels, x = std::abs(x_norm);
  std::complex<double> acc = 0.0;
  for (int k = 0; k < panels; k++)
  {
    const double lo = a + k * w;
    for (std::size_t i = 0; i < tab->n; i++)
    {
      double xi = 0.0, wi = 0.0;
      gsl_integration_glfixed_point(lo, lo + w, i, &xi, &wi, tab.get());
      const double er = p.eps * p.kappa * xi;
      const double phase = t * xi * std::sqrt(1.0 + er * er) / p.eps;
      acc += wi * lp_phi(xi / R) * kernel(x, xi, d) * std::polar(1.0, phase);
    }
  }
  return acc;
}

// The integrand is smooth and non-oscillatory here, so the fixed rule is exact to rounding.
double bump_mass(int d) { return oscillatory_integral_panels(0.0, 0.0, 1.0, DispersionParams{}, d, 64).real(); }

}  // namespace lowmach
