// Copyright 2026 The lowmach Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "lowmach/io/csv.hpp"
#include "lowmach/io/snapshot.hpp"
#include "lowmach/spectral/helmholtz.hpp"
#include "lowmach/spectral/littlewood_paley.hpp"
#include "lowmach/spectral/multiplier.hpp"
#include "lowmach/spectral/norms.hpp"
#include "lowmach/spectral/operators.hpp"
#include "support.hpp"

using namespace lowmach;
using namespace lowmach::testing;

TEST_SUITE("spectral")
{

TEST_CASE("grid rejects odd points and bad lengths")
{
  CHECK_THROWS_AS(SpectralGrid::cube(2, 15, 1.0), InvalidInput);
  CHECK_THROWS_AS(SpectralGrid::cube(2, 16, 0.0), InvalidInput);
  CHECK_THROWS_AS(SpectralGrid::cube(4, 16, 1.0), InvalidInput);
  const auto g = SpectralGrid::cube(3, 8, 2.0);
  CHECK(g.size() == 512);
  CHECK(g.half_size() == 8 * 8 * 5);
  CHECK(g.lattice_index(0, 4) == -4);
  CHECK(g.wavenumber(0, 1) == doctest::Approx(kPi));
}

TEST_CASE("round trip reproduces real and complex fields")
{
  for (auto g : {SpectralGrid::cube(1, 64, 3.0), SpectralGrid::cube(2, 48, 5.0), SpectralGrid::cube(3, 128, 7.0),
                 SpectralGrid(3, {16, 8, 32}, {1.0, 2.0, 3.0})})
  {
    std::mt19937 rng(7);
    std::normal_distribution<double> nd;
    RealField f(g, 2);
    for (auto &v : f.values())
      v = nd(rng);
    const RealField back = inverse_real(forward(f));
    CHECK(l2_diff(back, f) <= 1e-12 * l2_of(f));

    ComplexField z(g, 1);
    for (auto &v : z.values())
      v = {nd(rng), nd(rng)};
    const ComplexField zb = inverse_complex(forward(z));
    CHECK(l2_diff(zb, z) <= 1e-12 * l2_of(z));
  }
}

TEST_CASE("real fields have conjugate-symmetric spectra")
{
  const auto g = SpectralGrid::cube(2, 16, 1.0);
  const RealField f = random_modes(g, 1, 3, 7, 20, false);
  const Spectrum s = forward(to_complex(f));
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i < 16; i++)
    for (int j = 0; j < 16; j++)
    {
      const cplx a = s(0, i * 16 + j), b = s(0, ((16 - i) % 16) * 16 + (16 - j) % 16);
      worst = std::max(worst, std::abs(a - std::conj(b)));
      scale = std::max(scale, std::abs(a));
    }
  CHECK(worst <= 1e-12 * scale);
}

TEST_CASE("forward normalization gives Fourier coefficients")
{
  // f = 3 + 2 cos(2 pi x / L): c_0 = 3, c_{+-1} = 1.
  const double L = 2.5;
  const auto g = SpectralGrid::cube(1, 16, L);
  const RealField f = sample<double>(g, [&](const auto &x) { return 3.0 + 2.0 * std::cos(2.0 * kPi * x[0] / L); });
  const Spectrum s = forward(f);
  CHECK(std::abs(s(0, 0) - cplx(3.0)) < 1e-14);
  CHECK(std::abs(s(0, 1) - cplx(1.0)) < 1e-14);
  CHECK(std::abs(s(0, 2)) < 1e-14);
}

TEST_CASE("multiplier: identity, eigenfunction and composition")
{
  const double L = 3.0;
  const auto g1 = SpectralGrid::cube(1, 32, L);
  const RealField s1 = sample<double>(g1, [&](const auto &x) { return std::sin(2.0 * kPi * x[0] / L); });
  CHECK(max_diff(apply_real_multiplier(s1, [](const Wavevector &) { return cplx(1.0); }), s1) <= 1e-15);
  RealField lap = apply_real_multiplier(s1, [](const Wavevector &xi) { return cplx(norm2(xi)); });
  RealField want = s1;
  want *= std::pow(2.0 * kPi / L, 2);
  CHECK(max_diff(lap, want) <= 1e-12 * max_abs(want));

  const auto g = SpectralGrid::cube(2, 32, 4.0);
  const RealField f = random_modes(g, 1, 11, 6);
  const Symbol dx = [](const Wavevector &xi) { return cplx(0.0, xi[0]); };
  const ComplexField twice = apply_multiplier(apply_multiplier(f, dx), dx);
  const ComplexField once = apply_multiplier(f, [](const Wavevector &xi) { return cplx(-xi[0] * xi[0]); });
  CHECK(l2_diff(twice, once) <= 1e-12 * l2_of(once));
}

TEST_CASE("multiplier rejects non-finite symbols unless a zero-mode rule is declared")
{
  const auto g = SpectralGrid::cube(2, 16, 1.0);
  const RealField f = random_modes(g, 1, 5);
  const Symbol inv_lap = [](const Wavevector &xi) { return cplx(1.0 / norm2(xi)); };
  CHECK_THROWS_AS(apply_real_multiplier(f, inv_lap), InvalidInput);
  CHECK_NOTHROW(apply_real_multiplier(f, inv_lap, ZeroMode::Zero));
  const Symbol bad = [](const Wavevector &xi) { return xi[0] > 2.0 ? cplx(NAN) : cplx(1.0); };
  CHECK_THROWS_AS(apply_real_multiplier(f, bad, ZeroMode::Zero), InvalidInput);
  // Inverse Laplacian undoes -Laplacian on mean-free data.
  const RealField back = apply_real_multiplier(laplacian(f), inv_lap, ZeroMode::Zero);
  RealField negf = f;
  negf *= -1.0;
  CHECK(l2_diff(back, negf) <= 1e-12 * l2_of(f));
}

TEST_CASE("multiplier is linear")
{
  const auto g = SpectralGrid::cube(3, 16, 2.0);
  const RealField f = random_modes(g, 1, 1), h = random_modes(g, 1, 2);
  const Symbol sym = [](const Wavevector &xi) { return cplx(std::cos(xi[0]), xi[1] * xi[2]); };
  RealField comb = f;
  comb *= 2.5;
  comb.axpy(-0.75, h);
  ComplexField lhs = apply_multiplier(comb, sym);
  ComplexField rhs = apply_multiplier(f, sym);
  rhs *= cplx(2.5);
  rhs.axpy(cplx(-0.75), apply_multiplier(h, sym));
  CHECK(l2_diff(lhs, rhs) <= 1e-12 * l2_of(rhs));
}

TEST_CASE("derivatives of trigonometric fields")
{
  const double L = 2.0 * kPi;
  const auto g = SpectralGrid::cube(2, 32, L);
  const RealField f = sample<double>(g, [](const auto &x) { return std::sin(2.0 * x[0]) * std::cos(3.0 * x[1]); });
  const RealField gr = gradient(f);
  const RealField gx = sample<double>(g, [](const auto &x) { return 2.0 * std::cos(2.0 * x[0]) * std::cos(3.0 * x[1]); });
  const RealField gy = sample<double>(g, [](const auto &x) { return -3.0 * std::sin(2.0 * x[0]) * std::sin(3.0 * x[1]); });
  CHECK(max_diff(extract_component(gr, 0), gx) < 1e-12);
  CHECK(max_diff(extract_component(gr, 1), gy) < 1e-12);
  RealField lap = laplacian(f);
  RealField want = f;
  want *= -13.0;
  CHECK(max_diff(lap, want) < 1e-11);
  CHECK(max_diff(divergence(gr), lap) < 1e-11);
  CHECK(std::abs(integral(f)) < 1e-12);
}

TEST_CASE("Helmholtz projections fix gradients and solenoidal fields")
{
  const auto g = SpectralGrid::cube(2, 32, 6.0);
  const RealField phi = random_modes(g, 1, 21, 5);
  const RealField grad = gradient(phi);
  CHECK(l2_diff(helmholtz_Q(grad), grad) <= 1e-10 * l2_of(grad));
  CHECK(l2_of(helmholtz_P(grad)) <= 1e-10 * l2_of(grad));

  const RealField dpsi = gradient(random_modes(g, 1, 22, 5));
  RealField curl = stack<double>({extract_component(dpsi, 1), extract_component(dpsi, 0)});
  for (auto &v : curl.component(0))
    v = -v;
  CHECK(l2_diff(helmholtz_P(curl), curl) <= 1e-10 * l2_of(curl));
  CHECK(l2_of(helmholtz_Q(curl)) <= 1e-10 * l2_of(curl));

  const RealField scalar = random_modes(g, 1, 1);
  CHECK_THROWS_AS(helmholtz_P(scalar), InvalidInput);
  CHECK_THROWS_AS(helmholtz_Q(RealField::vector(SpectralGrid::cube(1, 8, 1.0))), InvalidInput);
}

TEST_CASE("Helmholtz projector algebra on random fields")
{
  for (auto g : {SpectralGrid::cube(2, 32, 3.0), SpectralGrid::cube(3, 16, 2.0)})
  {
    // Full-band noise, Nyquist planes included.
    std::mt19937 rng(4);
    std::normal_distribution<double> nd;
    RealField v = RealField::vector(g);
    for (auto &x : v.values())
      x = nd(rng);
    const double n = l2_of(v);
    const RealField P = helmholtz_P(v), Q = helmholtz_Q(v);
    CHECK(l2_diff(P + Q, v) <= 1e-12 * n);
    CHECK(l2_diff(helmholtz_P(P), P) <= 1e-12 * n);
    CHECK(l2_diff(helmholtz_Q(Q), Q) <= 1e-12 * n);
    CHECK(l2_of(helmholtz_Q(P)) <= 1e-12 * n);
    CHECK(l2_of(helmholtz_P(Q)) <= 1e-12 * n);
    CHECK(l2_of(divergence(P)) <= 1e-10 * l2_of(divergence(v)));
  }
}

TEST_CASE("Littlewood-Paley bump profile")
{
  CHECK(lp_psi(0.0) == 1.0);
  CHECK(lp_psi(1.0) == 1.0);
  CHECK(lp_psi(2.0) == 0.0);
  CHECK(lp_phi(1.0) == doctest::Approx(1.0));
  CHECK(lp_phi(0.5) == 0.0);
  CHECK(lp_phi(2.0) == 0.0);
  for (double r = 0.01; r < 40.0; r *= 1.07)
  {
    // Telescoping: psi(2r) + sum_j phi(r / 2^j) = psi(r / 2^J).
    double acc = lp_psi(2.0 * r);
    for (int j = 0; j <= 8; j++)
      acc += lp_phi(r / std::ldexp(1.0, j));
    CHECK(acc == doctest::Approx(lp_psi(r / 256.0)).epsilon(1e-14));
    CHECK(lp_phi(r) >= 0.0);
  }
  FrequencyShell sh{3};
  CHECK(sh.upper() / sh.lower() == 4.0);
  CHECK(sh.lower() > 0.0);
}

TEST_CASE("shell projection of single modes")
{
  // Box 2 pi: lattice wavenumbers are integers.
  const auto g = SpectralGrid::cube(2, 64, 2.0 * kPi);
  const RealField centre = sample<double>(g, [](const auto &x) { return std::cos(4.0 * x[0]); });
  auto p2 = lp_project(centre, {2});
  CHECK_FALSE(p2.empty);
  CHECK(max_diff(p2.field, centre) < 1e-13);
  CHECK(max_abs(lp_project(centre, {4}).field) < 1e-15);
  CHECK(max_abs(lp_project(centre, {0}).field) < 1e-15);

  const auto small = SpectralGrid::cube(2, 8, 2.0 * kPi);
  auto far = lp_project(RealField::scalar(small, 1.0), {10});
  CHECK(far.empty);
  CHECK(max_abs(far.field) == 0.0);
  CHECK(shell_is_empty(small, {10}));
  CHECK_FALSE(shell_is_empty(small, {1}));
}

TEST_CASE("dyadic blocks resolve the identity")
{
  const auto g = SpectralGrid::cube(2, 64, 5.0);
  const RealField f = random_modes(g, 1, 31, 12, 25, false);
  RealField sum = lp_lowpass(f, 0.5);
  for (int j = 0; j <= lp_top_shell(g); j++)
    sum += lp_project(f, {j}).field;
  CHECK(l2_diff(sum, f) <= 1e-10 * l2_of(f));
}

TEST_CASE("Parseval for dyadic blocks matches direct spectral summation")
{
  const auto g = SpectralGrid::cube(2, 64, 5.0);
  const RealField f = random_modes(g, 1, 32, 12, 25, false);
  const int J = lp_top_shell(g);
  double blocks = std::pow(l2_norm(lp_lowpass(f, 0.5)), 2);
  for (int j = 0; j <= J; j++)
    blocks += std::pow(l2_norm(lp_project(f, {j}).field), 2);
  // Oracle: sum over modes of (psi(2r)^2 + sum_j phi_j(r)^2) |c|^2 V.
  const Spectrum s = forward(f);
  const double direct = g.volume() * weighted_power(s, 0, [&](const Wavevector &xi) {
                          const double r = std::sqrt(norm2(xi));
                          double w = std::pow(lp_psi(2.0 * r), 2);
                          for (int j = 0; j <= J; j++)
                            w += std::pow(lp_phi(r / std::ldexp(1.0, j)), 2);
                          return w;
                        });
  CHECK(blocks == doctest::Approx(direct).epsilon(1e-10));
  const double total = std::pow(l2_norm(f), 2);
  CHECK(blocks >= 0.5 * total);
  CHECK(blocks <= total * (1.0 + 1e-12));
}

TEST_CASE("Lebesgue and Sobolev norms")
{
  const auto g = SpectralGrid::cube(3, 16, 2.0);
  const RealField c = RealField::scalar(g, -1.5);
  CHECK(sobolev_norm(c, 0.0) == doctest::Approx(1.5 * std::sqrt(8.0)));
  CHECK(lq_norm(c, kInf) == doctest::Approx(1.5));
  CHECK(lq_norm(c, 3.0) == doctest::Approx(1.5 * std::cbrt(8.0)));

  // e^{i xi.x} with xi = 2 pi (1, 2, 0) / L.
  const double k = 2.0 * kPi * std::sqrt(5.0) / 2.0;
  ComplexField mode = ComplexField::scalar(g);
  const RealField ph = sample<double>(g, [](const auto &x) { return kPi * (x[0] + 2.0 * x[1]); });
  for (std::size_t i = 0; i < g.size(); i++)
    mode(0, i) = std::polar(1.0, ph(0, i));
  for (double s : {-1.0, 0.5, 2.0})
    CHECK(sobolev_norm(mode, s) == doctest::Approx(std::pow(1.0 + k * k, s / 2.0) * std::sqrt(8.0)).epsilon(1e-12));

  const RealField f = random_modes(g, 1, 41, 3);
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
  CHECK(l2_norm(f) == doctest::Approx(l2_of(f)).epsilon(1e-12));
  // Vector fields are measured through the pointwise magnitude.
  const RealField v = random_modes(g, 3, 42, 3);
  CHECK(lq_norm(v, 4.0) == doctest::Approx(lq_norm(magnitude(v), 4.0)).epsilon(1e-12));
}

TEST_CASE("Besov norms")
{
  const auto g = SpectralGrid::cube(2, 64, 5.0);
  const RealField f = random_modes(g, 1, 51, 12, 25, false);
  const double l2 = l2_norm(f), b = besov_norm(f, 0.0, 2.0, 2.0);
  CHECK(b >= l2 / std::sqrt(2.0) * (1.0 - 1e-12));
  CHECK(b <= l2 * (1.0 + 1e-12));
  CHECK(besov_norm(f, 1.0, 2.0, 2.0) > b);
  CHECK(besov_norm(f, 0.0, 2.0, 1.0) >= b);
  CHECK_THROWS_AS(besov_norm(f, 0.0, 0.5, 2.0), InvalidInput);
  CHECK_THROWS_AS(besov_norm(f, 0.0, 2.0, 0.9), InvalidInput);
  CHECK_THROWS_AS(lq_norm(f, 0.5), InvalidInput);
  CHECK(spatial_norm(f, NormSpec::besov(0.0, 2.0, 2.0)) == b);
  CHECK(spatial_norm(f, NormSpec::sobolev(1.0)) == sobolev_norm(f, 1.0));
}

TEST_CASE("mixed norm quadrature")
{
  std::vector<double> t, v;
  for (int i = 0; i <= 10; i++)
  {
    t.push_back(0.1 * i);
    v.push_back(2.0 * 0.1 * i);
  }
  CHECK(mixed_norm(t, v, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mixed_norm(t, v, kInf) == doctest::Approx(2.0));
  // Trapezoid of 4 t^2 on h = 0.1: 4 (1/3 + h^2 / 6).
  CHECK(mixed_norm(t, v, 2.0) == doctest::Approx(std::sqrt(4.0 * (1.0 / 3.0 + 0.01 / 6.0))).epsilon(1e-13));
  std::vector<double> bad = t;
  bad[3] += 0.01;
  CHECK_THROWS_AS(mixed_norm(bad, v, 2.0), InvalidInput);
  CHECK_THROWS_AS(mixed_norm(t, v, 0.5), InvalidInput);

  const auto g = SpectralGrid::cube(1, 16, 1.0);
  Trajectory<double> tr;
  for (int i = 0; i < 3; i++)
  {
    tr.times.push_back(i);
    tr.frames.push_back(RealField::scalar(g, 1.0 + i));
  }
  CHECK(mixed_norm(tr, kInf, NormSpec::lebesgue(2.0)) == doctest::Approx(3.0));
}

TEST_CASE("2/3 dealiasing removes the top third")
{
  const auto g = SpectralGrid::cube(1, 12, 2.0 * kPi);
  const RealField lo = sample<double>(g, [](const auto &x) { return std::cos(4.0 * x[0]); });
  const RealField hi = sample<double>(g, [](const auto &x) { return std::cos(5.0 * x[0]); });
  Spectrum s = forward(lo + hi);
  dealias(s);
  CHECK(max_diff(inverse_real(s), lo) < 1e-14);
}

TEST_CASE("snapshot and csv round trip")
{
  const auto dir = std::filesystem::temp_directory_path() / "lowmach_io_test";
  std::filesystem::create_directories(dir);
  const auto g = SpectralGrid(2, {8, 4, 1}, {1.0, 0.5, 1.0});
  const RealField f = random_modes(g, 2, 61, 1);
  write_snapshot((dir / "snap").string(), f, 0.25);
  const Snapshot s = read_snapshot((dir / "snap").string());
  CHECK(s.time == 0.25);
  CHECK(s.field.grid() == g);
  CHECK(s.field.values() == f.values());
  CHECK(std::filesystem::file_size(dir / "snap.bin") == 8 * 64);

  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  {
    CsvWriter w((dir / "t.csv").string(), {"a", "b", "c"});
    w.row({1.5, 2LL, std::string("x")});
    CHECK_THROWS_AS(w.row({1.0}), InvalidInput);
  }
  std::ifstream in(dir / "t.csv");
  std::string head, row;
  std::getline(in, head);
  std::getline(in, row);
  CHECK(head == "a,b,c");
  CHECK(row == "1.5,2,x");
  std::filesystem::remove_all(dir);
}

}
