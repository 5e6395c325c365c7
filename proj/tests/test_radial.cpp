#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>

#include "singosc/qalg.hpp"
#include "singosc/radial.hpp"
#include "support.hpp"

using namespace singosc;

namespace {

ComponentSpec spec(int m, Rational c, int l, Rational hbar = 1, Rational omega = 1) {
  ComponentSpec s;
  s.m = m;
  s.c = c;
  s.l = l;
  s.hbar = hbar;
  s.omega = omega;
  return s;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("closed form: reference values") {
  RadialMode g = closed_form(spec(2, 0, 0), 0);
  CHECK(g.alpha_exact == Rational(0));
  CHECK(g.delta == 0.0);
  CHECK(g.energy_exact == Rational(1));

  g = closed_form(spec(2, 1, 0), 0);
  CHECK(g.alpha == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(g.energy == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-14));

  g = closed_form(spec(3, 0, 1), 0);
  CHECK(g.alpha_exact == Rational(3, 2));
  CHECK(g.energy_exact == Rational(5, 2));

  // hbar and omega enter through c' = c/hbar^2 and E in units of hbar omega
  g = closed_form(spec(4, Rational(3, 2) * Rational(4), 0, 2, 3), 1);
  CHECK(g.alpha_exact == Rational(2));
  CHECK(g.energy_exact == Rational(30));
}

TEST_CASE("closed form: alpha identity, exact where the radicand is square") {
  testing::Draw draw(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = draw.integer(1, 8);
    const int l = m == 1 ? draw.integer(0, 1) : draw.integer(0, 5);
    const Rational c = draw.rational_in(0, 4);
    const RadialMode mode = closed_form(spec(m, c, l), 0);
    const double lam = l + (m - 2) / 2.0;
    const double expect = (m == 1 && l == 0 && c.is_zero()) ? -0.5 : std::sqrt(lam * lam + 2 * c.to_double());
    CHECK(mode.alpha == doctest::Approx(expect).epsilon(1e-12));
    CHECK(mode.delta == doctest::Approx((mode.alpha - l - (m - 2) / 2.0) / 2).epsilon(1e-12));
    if (mode.alpha_exact) CHECK(mode.alpha_exact->to_double() == doctest::Approx(expect).epsilon(1e-15));
  }
}

TEST_CASE("kummer: series values") {
  CHECK(kummer(0, 1.7, 3.3) == 1.0);
  CHECK(kummer(1, 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kummer(2, 3.0, 0.0) == 1.0);
  // 1F1(-n; b; z) is a scaled generalised Laguerre polynomial:
  // L_2^(a)(z) = C(2+a, 2) 1F1(-2; a+1; z)
  const double a = 0.75, z = 1.3;
  const double lag2 = 0.5 * z * z - (a + 2) * z + 0.5 * (a + 1) * (a + 2);
  CHECK(0.5 * (a + 2) * (a + 1) * kummer(2, a + 1, z) == doctest::Approx(lag2).epsilon(1e-14));
}

TEST_CASE("wavefunction: Gaussian ground state, nodes and unit norm") {
  const RadialMode g = closed_form(spec(2, 0, 0), 0);
  const double ratio = wavefunction(g, 1.5) / wavefunction(g, 0.5);
  CHECK(ratio == doctest::Approx(std::exp(-(1.5 * 1.5 - 0.5 * 0.5) / 2)).epsilon(1e-13));

  testing::Draw draw(32);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = draw.integer(1, 7);
    const int l = m == 1 ? draw.integer(0, 1) : draw.integer(0, 3);
    const ComponentSpec s = spec(m, draw.rational_in(0, 4), l, 1, draw.rational(1, 4, 2));
    for (int Nr = 0; Nr <= 4; ++Nr) {
      const RadialMode mode = closed_form(s, Nr);
      CHECK(wavefunction_sign_changes(mode) == Nr);
      const NormCheck nc = norm_integral(mode);
      CHECK(nc.converged);
      CHECK(nc.value == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("wavefunction: raw-prefactor normalisation is finite") {
  for (const ComponentSpec& s : {spec(2, 0, 0), spec(3, 0, 1), spec(2, 1, 2)}) {
    const NormCheck nc = norm_integral(closed_form(s, 2), WaveNorm::raw_prefactor);
    CHECK(nc.converged);
    CHECK(std::isfinite(nc.value));
    CHECK(nc.value > 0);
  }
  CHECK(norm_integral(closed_form(spec(2, 0, 0), 2), WaveNorm::raw_prefactor).value ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("finite differences: reference values") {
  const FdResult a = fd_eigenvalues(spec(2, 0, 0), {}, 3);
  for (int k = 0; k < 3; ++k) CHECK(rel(a.energies[k], 1.0 + 2 * k) < 1e-6);

  const FdResult b = fd_eigenvalues(spec(4, Rational(3, 2), 0), {}, 1);
  CHECK(rel(b.energies[0], 3.0) < 1e-6);

  const FdResult c = fd_eigenvalues(spec(2, 1, 0), {}, 1);
  CHECK(rel(c.energies[0], 1 + std::sqrt(2.0)) < 1e-6);
}

TEST_CASE("finite differences: agreement, h^2 convergence and extrapolation gain") {
  testing::Draw draw(33);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = draw.integer(1, 8);
    const int l = m == 1 ? draw.integer(0, 1) : draw.integer(0, 3);
    const ComponentSpec s = spec(m, draw.rational_in(0, 4), l, draw.rational(1, 3, 2), draw.rational(1, 3, 2));
    const auto t0 = std::chrono::steady_clock::now();
    const FdResult fd = fd_eigenvalues(s, {}, 4);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 10.0);
    REQUIRE(fd.level_energies.size() == 3);
    for (int k = 0; k < 4; ++k) {
      const double exact = closed_form(s, k).energy;
      INFO("m=" << m << " l=" << l << " k=" << k);
      CHECK(rel(fd.energies[k], exact) < 1e-6);
      const double e0 = std::abs(fd.level_energies[0][k] - exact);
      const double e1 = std::abs(fd.level_energies[1][k] - exact);
      const double e2 = std::abs(fd.level_energies[2][k] - exact);
      // second order: halving h cuts the error about fourfold
      CHECK(e0 / e1 == doctest::Approx(4.0).epsilon(0.15));
      // extrapolation buys at least two digits over the finest level
      CHECK(std::abs(fd.energies[k] - exact) < 1e-2 * e2);
    }
  }
}

TEST_CASE("finite differences: eigenvector k has k sign changes") {
  for (const ComponentSpec& s : {spec(2, 0, 0), spec(1, 0, 0), spec(1, 0, 1), spec(5, Rational(7, 3), 2)}) {
    const FdModes modes = fd_eigenvectors(s, {}, 5);
    for (int k = 0; k < 5; ++k) CHECK(modes.sign_changes[k] == k);
  }
}

TEST_CASE("tridiagonal helpers: Sturm bisection and inverse iteration") {
  // -y'' on 50 interior points with Dirichlet ends: 2 - 2 cos(k pi / 51)
  const int n = 50;
  std::vector<double> diag(n, 2.0), off(n - 1, -1.0);
  for (int k = 0; k < 5; ++k) {
    const double lambda = tridiagonal_eigenvalue(diag, off, k);
    CHECK(lambda == doctest::Approx(2 - 2 * std::cos((k + 1) * M_PI / (n + 1))).epsilon(1e-12));
    const std::vector<double> v = tridiagonal_eigenvector(diag, off, lambda);
    double ratio = v[0] / std::sin((k + 1) * M_PI / (n + 1));
    for (int i = 0; i < n; ++i) {
      CHECK(v[i] == doctest::Approx(ratio * std::sin((i + 1) * (k + 1) * M_PI / (n + 1))).epsilon(1e-8));
    }
  }
}

TEST_CASE("total energy: examples and agreement with the algebraic spectrum") {
  const TotalEnergy g = total_energy(closed_form(spec(2, 0, 0), 0), closed_form(spec(2, 0, 0), 0));
  CHECK(g.energy_exact == Rational(2));
  const TotalEnergy e = total_energy(closed_form(spec(2, 0, 0), 1), closed_form(spec(2, 0, 0), 0));
  CHECK(e.energy_exact == Rational(4));
  CHECK(e.p == 1);
  CHECK_THROWS(total_energy(closed_form(spec(2, 0, 0, 1, 1), 0), closed_form(spec(2, 0, 0, 1, 2), 0)));

  testing::Draw draw(34);
  for (int trial = 0; trial < 50; ++trial) {
    const int N = draw.integer(2, 8), n = draw.integer(1, N - 1);
    const int l1 = n == 1 ? 1 : draw.integer(0, 3), l2 = N - n == 1 ? 1 : draw.integer(0, 3);
    const Rational hbar = draw.rational(1, 3, 2), omega = draw.rational(1, 3, 2);
    const Rational c1 = draw.rational_in(0, 4), c2 = draw.rational_in(0, 4);
    const int N1 = draw.integer(0, 2), N2 = draw.integer(0, 2);
    const TotalEnergy t = total_energy(closed_form(spec(n, c1, l1, hbar, omega), N1),
                                       closed_form(spec(N - n, c2, l2, hbar, omega), N2));
    CHECK(t.forms_agree);
    const UnirrepSolution s =
        solve_unirrep(1, 1, 1, N1 + N2, CentralEigs::make(N, n, l1, l2, hbar, omega, c1, c2));
    if (t.energy_exact && s.E_exact) {
      CHECK(*t.energy_exact == *s.E_exact);
    } else {
      CHECK(rel(t.energy, s.E.convert_to<double>()) < 1e-12);
    }
  }
}
