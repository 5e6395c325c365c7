#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singosc/qalg.hpp"
#include "support.hpp"

using namespace singosc;

namespace {

CentralEigs random_eigs(testing::Draw& draw) {
  const int N = draw.integer(2, 8);
  const int n = draw.integer(1, N - 1);
  const int ln = n == 1 ? draw.integer(0, 1) : draw.integer(0, 4);
  const int lNn = N - n == 1 ? draw.integer(0, 1) : draw.integer(0, 4);
  return CentralEigs::make(N, n, ln, lNn, draw.rational(1, 5, 3), draw.rational(1, 5, 3),
                           draw.rational_in(0, 4), draw.rational_in(0, 4));
}

}  // namespace

TEST_CASE("m values: reference values") {
  CHECK(m_values(CentralEigs::make(4, 2, 0, 0)).m1_exact == Rational(0));
  const MQuantum m = m_values(CentralEigs::make(6, 3, 0, 0, 1, 1, 1, 0));
  CHECK(m.m1_sq == Rational(9));
  CHECK(m.m1_exact == Rational(3));
  // hbar scaling: c1 = hbar^2 gives the same m1
  CHECK(m_values(CentralEigs::make(6, 3, 0, 0, 3, 1, 9, 0)).m1_exact == Rational(3));
}

TEST_CASE("m values: free blocks give 2l+m-2 exactly") {
  for (int N = 4; N <= 8; ++N) {
    for (int n = 2; n <= N - 2; ++n) {
      for (int l = 0; l <= 10; ++l) {
        const MQuantum m = m_values(CentralEigs::make(N, n, l, l));
        REQUIRE(m.exact());
        CHECK(*m.m1_exact == Rational(2 * l + n - 2));
        CHECK(*m.m2_exact == Rational(2 * l + N - n - 2));
      }
    }
  }
}

TEST_CASE("surd field arithmetic") {
  const auto f = Surd::make_field(Rational(2), Rational(3));
  const Surd a = Surd::m1(f), b = Surd::m2(f);
  CHECK((a * a).is_rational());
  CHECK((a * a).rational_part() == Rational(2));
  CHECK(((a + b) * (a - b)).rational_part() == Rational(-1));
  CHECK_FALSE((a * b).is_rational());
  // dependent radicands: sqrt(8) = 2 sqrt(2)
  const auto g = Surd::make_field(Rational(2), Rational(8));
  CHECK(Surd::m2(g) == Surd::m1(g) + Surd::m1(g));
}

TEST_CASE("factored form vanishes at its roots") {
  const CentralEigs ce = CentralEigs::make(4, 2, 1, 2, 1, 1, 0, 0);
  const MQuantum mq = m_values(ce);
  REQUIRE(mq.exact());
  const Rational m1 = *mq.m1_exact, m2 = *mq.m2_exact;
  const Rational u(3, 7), E(11, 3);
  const auto roots = factored_roots<Rational>(ce, m1, m2, E);
  CHECK(roots[0] == (Rational(2) + m1 + m2) / Rational(4));
  for (const Rational& y : roots) {
    CHECK(structure_fn_factored<Rational>(y - u, u, E, m1, m2, ce).is_zero());
  }
}

TEST_CASE("raw and factored forms agree at seven points (independent oracle)") {
  testing::Draw draw(21);
  for (int trial = 0; trial < 20; ++trial) {
    const CentralEigs ce = random_eigs(draw);
    const MQuantum mq = m_values(ce);
    const auto field = Surd::make_field(mq.m1_sq, mq.m2_sq);
    const Surd m1 = Surd::m1(field), m2 = Surd::m2(field);
    const Surd u = Surd(draw.rational(-9, 9)), E = Surd(draw.rational(1, 30));
    for (int x = 0; x < 7; ++x) {
      const Surd sx{Rational(x)};
      CHECK(structure_fn_raw<Surd>(sx, u, E, ce) == structure_fn_factored<Surd>(sx, u, E, m1, m2, ce));
    }
    CHECK(structure_forms_agree(ce, u.rational_part(), E.rational_part()));
    FactoredOptions bare;
    bare.reading = LastFactor::bare_x;
    if (!u.rational_part().is_zero()) {
      CHECK_FALSE(structure_forms_agree(ce, u.rational_part(), E.rational_part(), bare));
    }
  }
}

TEST_CASE("unirreps: ground state of the free (4,2) system") {
  const CentralEigs ce = CentralEigs::make(4, 2, 0, 0);
  const UnirrepSolution s = solve_unirrep(1, 1, 1, 0, ce);
  REQUIRE(s.E_exact.has_value());
  CHECK(*s.E_exact == Rational(2));
  // at p = 0, x = 1 is the upper boundary point
  REQUIRE(s.phi.size() == 2);
  CHECK(s.phi[1] == 0);
  CHECK(s.admissible);
  const UnirrepSolution s1 = solve_unirrep(1, 1, 1, 1, ce);
  CHECK(*s1.E_exact == Rational(4));
  CHECK(s1.phi[1] > 0);
  CHECK(s1.phi[2] == 0);
}

TEST_CASE("unirreps: boundary conditions and positivity for eps = (+1,+1)") {
  testing::Draw draw(22);
  for (int trial = 0; trial < 25; ++trial) {
    const CentralEigs ce = random_eigs(draw);
    const MQuantum mq = m_values(ce);
    if (mq.m1 <= 0 || mq.m2 <= 0) continue;
    const UnirrepSolution s = solve_unirrep(1, 1, 1, 3, ce);
    REQUIRE(s.phi.size() == 5);
    CHECK(abs(s.phi[0]) <= kRealZeroTol);
    CHECK(abs(s.phi[4]) <= kRealZeroTol);
    for (int x = 1; x <= 3; ++x) CHECK(s.phi[x] > 0);
    CHECK(s.admissible);
  }
}

TEST_CASE("unirreps: eps = (-1,-1) with large m1 is inadmissible") {
  const CentralEigs ce = CentralEigs::make(8, 4, 6, 0, 1, 1, 5, 0);
  for (int p = 0; p <= 4; ++p) {
    const UnirrepSolution s = solve_unirrep(1, -1, -1, p, ce);
    CHECK_FALSE(s.admissible);
    CHECK((!s.energy_positive || !s.positive));
  }
}

TEST_CASE("unirreps: energies rise by 2 hbar omega per p") {
  testing::Draw draw(23);
  for (int trial = 0; trial < 10; ++trial) {
    const CentralEigs ce = random_eigs(draw);
    const Real step = 2 * to_real(ce.hbar * ce.omega);
    Real prev = solve_unirrep(1, 1, 1, 0, ce).E;
    for (int p = 1; p <= 6; ++p) {
      const Real E = solve_unirrep(1, 1, 1, p, ce).E;
      CHECK(abs(E - prev - step) < Real("1e-40"));
      prev = E;
    }
  }
}

TEST_CASE("unirreps: solution list order and set-2 flag") {
  const CentralEigs ce = CentralEigs::make(8, 4, 1, 1, 1, 1, 1, 1);
  const auto all = solve_unirreps(2, ce);
  REQUIRE(all.size() == 12);
  CHECK(all.front().set_id == 1);
  CHECK(all.back().set_id == 3);
  for (const auto& s : all) {
    if (s.set_id == 2) CHECK_FALSE(s.admissible);
  }
}

TEST_CASE("harmonic limit: reference values and full sweep") {
  const HarmonicReport r4 = harmonic_limit_check(4, 6);
  CHECK(r4.all_pass());
  for (const auto& row : r4.rows) {
    if (row.n == 2 && row.l == 0) CHECK(row.E == Rational(2));
    if (row.n == 2 && row.l == 2) CHECK(row.E == Rational(4));
  }
  int seen = 0;
  for (const auto& row : r4.rows) {
    if (row.n == 2 && row.l == 2) ++seen;
  }
  CHECK(seen == 4);
  const HarmonicReport r8 = harmonic_limit_check(8, 6, Rational(1, 3), Rational(5, 2));
  CHECK(r8.all_pass());
  for (const auto& row : harmonic_limit_check(8, 1).rows) {
    if (row.n == 4 && row.l == 1) CHECK(row.E == Rational(5));
  }
  CHECK(harmonic_sign(1, 0) == -1);
  CHECK(harmonic_sign(1, 1) == 1);
  CHECK(harmonic_sign(3, 0) == 1);
}
