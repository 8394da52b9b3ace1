// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lowmach/limit/data.hpp"
#include "lowmach/limit/exponents.hpp"
#include "lowmach/limit/ns_solver.hpp"
#include "lowmach/limit/rates.hpp"
#include "lowmach/limit/study.hpp"
#include "lowmach/spectral/helmholtz.hpp"
#include "lowmach/spectral/norms.hpp"
#include "lowmach/spectral/operators.hpp"
#include "support.hpp"

using namespace lowmach;
using namespace lowmach::testing;

namespace
{

std::string slurp(const std::string &path)
{
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("limit")
{

TEST_CASE("rational arithmetic")
{
  const Rational a(6, -8);
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(a + Rational(1, 4) == Rational(-1, 2));
  CHECK(a * Rational(4, 3) == Rational(-1));
  CHECK(a / Rational(-3, 2) == Rational(1, 2));
  CHECK(a - a == Rational(0));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(4, 9).str() == "4/9");
  CHECK(Rational(2).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
}

TEST_CASE("exponent table values")
{
  CHECK(beta_exponent(Rational(2)) == Rational(1));
  CHECK(alpha_exponent(Rational(2), Rational(2)) == Rational(1));
  CHECK(beta_exponent(Rational(3, 2)) == Rational(4, 9));
  CHECK(alpha_exponent(Rational(2), Rational(3, 2)) == Rational(8, 9));
  for (const Rational g : {Rational(6, 5), Rational(3, 2), Rational(2), Rational(5, 2)})
    CHECK(alpha_exponent(Rational(6), g) == Rational(0));
  CHECK(beta_exponent(1.5) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  CHECK(alpha_exponent(4.0, 2.0) == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(alpha_exponent(Rational(1), Rational(2)), InvalidInput);
  CHECK_THROWS_AS(alpha_exponent(Rational(7), Rational(2)), InvalidInput);
  CHECK_THROWS_AS(beta_exponent(Rational(1)), InvalidInput);
  CHECK_THROWS_AS(beta_exponent(Rational(3)), InvalidInput);
}

TEST_CASE("exponents follow their branch formula on both sides of gamma = 2")
{
  // The beta branches meet at 1/2 from below and 1 at gamma = 2: a documented jump.
  const Rational below(1999, 1000);
  CHECK(beta_exponent(below) == Rational(2) / (Rational(6) - below));
  CHECK(beta_exponent(Rational(2)) == Rational(1));
  CHECK(std::abs(beta_exponent(1.999999) - 0.5) < 1e-6);
  // For gamma < 2 the proof's identity 2 alpha(4) = beta holds exactly.
  for (int n = 11; n < 20; n++)
  {
    const Rational g(n, 10);
    CHECK(Rational(2) * alpha_exponent(Rational(4), g) == beta_exponent(g));
    for (int p = 2; p <= 6; p++)
      CHECK(alpha_exponent(Rational(p), g) ==
            Rational(2) * (Rational(6) - Rational(p)) / (Rational(p) * (Rational(6) - g)));
  }
  for (int n = 20; n < 30; n++)
    for (int p = 2; p <= 6; p++)
      CHECK(alpha_exponent(Rational(p), Rational(n, 10)) == (Rational(6) - Rational(p)) / Rational(2 * p));
}

TEST_CASE("rate fit")
{
  const std::vector<double> eps = {0.4, 0.2, 0.1, 0.05};
  const RateFit one = rate_fit(eps, eps);
  CHECK(one.rate == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(one.residual < 1e-14);

  std::vector<double> v;
  for (double e : eps)
    v.push_back(3.0 * std::pow(e, 4.0 / 9.0));
  CHECK(std::abs(rate_fit(eps, v).rate - 4.0 / 9.0) <= 1e-12);

  // +-5% multiplicative noise over many draws.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> noise(-0.05, 0.05);
  for (int trial = 0; trial < 200; trial++)
  {
    std::vector<double> w;
    for (double e : eps)
      w.push_back(2.0 * std::pow(e, 0.7) * (1.0 + noise(rng)));
    const RateFit f = rate_fit(eps, w);
    CHECK(std::abs(f.rate - 0.7) <= 0.05);
    CHECK(f.residual <= std::log(1.05 / 0.95) + 1e-12);
  }

  CHECK_THROWS_AS(rate_fit(std::vector<double>{0.4, 0.2}, std::vector<double>{1.0, 0.5}), InvalidInput);
  CHECK_THROWS_AS(rate_fit(eps, std::vector<double>{1.0, 0.0, 0.5, 0.2}), InvalidInput);
  CHECK_THROWS_AS(rate_fit(eps, std::vector<double>{1.0, -1.0, 0.5, 0.2}), InvalidInput);
}

TEST_CASE("rate table: lookup, monotonicity flag, deterministic CSV")
{
  RateTable t({0.4, 0.2, 0.1});
  const auto &s = t.add("a", kInf, 2.0, 0.0, {0.4, 0.2, 0.1});
  CHECK(s.decreasing);
  CHECK(s.fit.rate == doctest::Approx(1.0));
  CHECK_FALSE(t.add("b", 2.0, 2.2, 0.0, {1.0, 1.0, 0.5}).decreasing);
  CHECK(t.has("a"));
  CHECK_FALSE(t.has("z"));
  CHECK_THROWS_AS(t.at("z"), InvalidInput);
  CHECK_THROWS_AS(t.add("c", 2.0, 2.0, 0.0, {1.0}), InvalidInput);

  const auto dir = std::filesystem::temp_directory_path();
  const std::string p1 = (dir / "lowmach_rt1.csv").string(), p2 = (dir / "lowmach_rt2.csv").string();
  t.write_csv(p1);
  t.write_csv(p2);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(slurp(p1).find("a") != std::string::npos);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("cumulative Simpson")
{
  // Simpson pairs integrate cubics exactly; the end panel is exact for quadratics.
  const double h = 0.1;
  for (int n : {2, 8})
  {
    std::vector<double> f;
    for (int i = 0; i <= n; i++)
    {
      const double x = i * h;
      f.push_back(1.0 - 2.0 * x + 3.0 * x * x * x);
    }
    const auto c = cumulative_simpson(f, h);
    REQUIRE(c.size() == f.size());
    CHECK(c[0] == 0.0);
    for (int i = 2; i <= n; i += 2)
    {
      const double x = i * h;
      CHECK(c[i] == doctest::Approx(x - x * x + 0.75 * x * x * x * x).epsilon(1e-13));
    }
  }
  for (int n : {3, 9})
  {
    std::vector<double> f;
    for (int i = 0; i <= n; i++)
    {
      const double x = i * h;
      f.push_back(1.0 - 2.0 * x + 3.0 * x * x);
    }
    const auto c = cumulative_simpson(f, h);
    for (int i = 1; i <= n; i++)
    {
      const double x = i * h;
      CHECK(c[i] == doctest::Approx(x - x * x + x * x * x).epsilon(1e-13));
    }
  }
  CHECK(cumulative_simpson(std::vector<double>{2.0, 2.0}, 0.5).back() == doctest::Approx(1.0));
}

TEST_CASE("Navier-Stokes: Taylor-Green over one viscous time")
{
  const double nu = 0.1;
  const auto g = SpectralGrid::cube(2, 32, 2.0 * kPi);
  NSOptions opt;
  opt.t_end = 1.0 / (2.0 * nu);
  opt.dt_max = 0.01;
  const NSResult r = ns_solve(NSState{taylor_green(g, nu, 0.0), 0.0, nu}, opt);
  CHECK(r.final_state.time == doctest::Approx(opt.t_end));
  // Closed form built independently of the library helper.
  const double decay = std::exp(-2.0 * nu * opt.t_end);
  const RealField want = stack<double>(
    {sample<double>(g, [&](const auto &x) { return decay * std::sin(x[0]) * std::cos(x[1]); }),
     sample<double>(g, [&](const auto &x) { return -decay * std::cos(x[0]) * std::sin(x[1]); })});
  CHECK(max_diff(r.final_state.u, want) <= 1e-8);
  CHECK(max_diff(taylor_green(g, nu, opt.t_end), want) <= 1e-14);
}

TEST_CASE("Navier-Stokes: zero stays zero, divergence and energy balance on random data")
{
  const auto g = SpectralGrid::cube(2, 64, 2.0 * kPi);
  NSOptions opt;
  opt.t_end = 0.5;
  opt.sample_every = 0.01;
  opt.dt_max = 0.005;
  const NSResult z = ns_solve(NSState{RealField::vector(g), 0.0, 0.05}, opt);
  CHECK(max_abs(z.final_state.u) == 0.0);

  RealField u0 = helmholtz_P(random_modes(g, 2, 31, 4));
  u0 *= 0.5 / max_abs(u0);
  const NSResult r = ns_solve(NSState{u0, 0.0, 0.05}, opt);
  CHECK(r.max_divergence <= 1e-10);
  CHECK(max_abs(divergence(r.final_state.u)) <= 1e-10);
  const double E0 = r.energy.front();
  CHECK(r.energy_residual() <= 1e-6 * E0);
  CHECK(r.energy.back() < E0);
  CHECK(r.times.size() == 51);

  // The frame-based Leray check agrees.
  const LerayReport lr = leray_energy_check(r.times, r.frames, 0.05, u0);
  CHECK(lr.ok);
  CHECK(lr.energy0 == doctest::Approx(E0).epsilon(1e-12));
  CHECK(std::abs(lr.max_residual) <= 1e-6 * E0);

  // Non-solenoidal initial data is rejected.
  CHECK_THROWS_AS(ns_solve(NSState{random_modes(g, 2, 32), 0.0, 0.05}, opt), InvalidInput);
}

TEST_CASE("Leray check: zero flow and a flow that gains energy")
{
  const auto g = SpectralGrid::cube(2, 16, 2.0 * kPi);
  const std::vector<double> t = {0.0, 0.5, 1.0};
  const std::vector<RealField> zero(3, RealField::vector(g));
  const LerayReport z = leray_energy_check(t, zero, 0.1, RealField::vector(g));
  CHECK(z.ok);
  CHECK(z.max_residual == 0.0);

  RealField u = taylor_green(g, 0.1, 0.0);
  std::vector<RealField> grow;
  for (double s : {1.0, 1.1, 1.2})
  {
    RealField v = u;
    v *= s;
    grow.push_back(v);
  }
  CHECK_FALSE(leray_energy_check(t, grow, 0.1, u).ok);
}

TEST_CASE("initial data generator")
{
  const auto g = SpectralGrid::cube(2, 64, 24.0);
  SUBCASE("amplitude 0 is the equilibrium")
  {
    for (DataKind k : {DataKind::WellPrepared, DataKind::IllPrepared})
    {
      const InitialData d = make_data(k, 0.0, 0.1, 2.0, g);
      CHECK(max_diff(d.state.rho(), RealField::scalar(g, 1.0)) == 0.0);
      CHECK(max_abs(d.state.momentum()) == 0.0);
      CHECK(d.report.energy == 0.0);
    }
  }
  SUBCASE("well-prepared velocity is solenoidal and the internal energy vanishes with eps")
  {
    std::vector<double> eps = {0.4, 0.2, 0.1, 0.05}, pi1, gs;
    for (double e : eps)
    {
      const InitialData d = make_data(DataKind::WellPrepared, 1.0, e, 2.0, g);
      const RealField u = d.limit_velocity;
      CHECK(max_abs(divergence(u)) <= 1e-10 * max_abs(u));
      pi1.push_back(d.report.internal_l1);
      gs.push_back(d.report.grad_sqrt_rho_l2);
    }
    for (std::size_t i = 1; i < eps.size(); i++)
    {
      CHECK(pi1[i] < pi1[i - 1]);
      CHECK(gs[i] < gs[i - 1]);
    }
    CHECK(rate_fit(eps, pi1).rate == doctest::Approx(2.0).epsilon(0.05));
  }
  SUBCASE("ill-prepared density deviation scales like eps^beta")
  {
    for (double gamma : {1.5, 2.0})
    {
      std::vector<double> eps = {0.4, 0.2, 0.1, 0.05}, dev;
      for (double e : eps)
      {
        const InitialData d = make_data(DataKind::IllPrepared, 1.0, e, gamma, g);
        dev.push_back(d.report.rho_minus_1_l2);
        CHECK(d.report.beta == doctest::Approx(beta_exponent(gamma)));
        // Carries an O(1) gradient part.
        CHECK(l2_of(helmholtz_Q(d.state.momentum())) > 0.1 * l2_of(d.state.momentum()));
      }
      const double rate = rate_fit(eps, dev).rate;
      CHECK(rate >= 0.8 * beta_exponent(gamma));
      if (gamma == 2.0)
        CHECK(std::abs(rate - 1.0) <= 0.2);
    }
  }
  SUBCASE("rejects data with vacuum")
  {
    CHECK_THROWS_AS(make_data(DataKind::IllPrepared, 100.0, 0.4, 2.0, g), InvalidInput);
  }
}

TEST_CASE("window norm sees only the centred half box")
{
  const auto g = SpectralGrid::cube(2, 64, 8.0);
  // Supported outside the window.
  const RealField out = sample<double>(g, [](const auto &x) { return (x[0] < 1.5 || x[0] > 6.5) ? 1.0 : 0.0; });
  CHECK(window_l2(out) == 0.0);
  // Constant 1: the closed window [2, 6]^2 holds 33 x 33 nodes of spacing 1/8.
  CHECK(window_l2(RealField::scalar(g, 1.0)) == doctest::Approx(33.0 * 0.125).epsilon(1e-12));
}

}
