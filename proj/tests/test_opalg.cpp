#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singosc/generators.hpp"
#include "singosc/relations.hpp"
#include "singosc/verify.hpp"
#include "support.hpp"

using namespace singosc;

namespace {

LaurentCoeff param(Frame f, Param p) { return LaurentCoeff::scalar(f, ParamScalar::symbol(p)); }

MultiIndex d(std::initializer_list<int> idx) {
  MultiIndex b{};
  for (int i : idx) b[i] += 1;
  return b;
}

DiffOp rotation(Frame f, int i, int j) {
  // hbar (x_i d_j - x_j d_i), built term by term
  const LaurentCoeff h = param(f, Param::hbar);
  return DiffOp::term(h * LaurentCoeff::coordinate(f, i), d({j})) -
         DiffOp::term(h * LaurentCoeff::coordinate(f, j), d({i}));
}

}  // namespace

TEST_CASE("rational: exact parsing and arithmetic") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  // promotion past 64 bits and back
  Rational big = pow(Rational(1000000007), 4);
  CHECK((big / pow(Rational(1000000007), 3)) == Rational(1000000007));
  Rational sq;
  CHECK(Rational(9, 49).exact_sqrt(sq));
  CHECK(sq == Rational(3, 7));
  CHECK_FALSE(Rational(2).exact_sqrt(sq));
}

TEST_CASE("property: rational and parameter-polynomial ring axioms") {
  testing::Draw draw(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = draw.rational(-50, 50), b = draw.rational(-50, 50), c = draw.rational(-50, 50);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Rational(0));
  }
  for (int trial = 0; trial < 60; ++trial) {
    const ParamScalar p = draw.scalar(), q = draw.scalar(), r = draw.scalar();
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("property: coefficient ring is commutative, associative and canonical") {
  testing::Draw draw(12);
  for (auto [N, n] : {std::pair{2, 1}, {4, 2}, {5, 2}}) {
    const Frame f = Frame::checked(N, n);
    for (int trial = 0; trial < 20; ++trial) {
      const LaurentCoeff a = draw.coeff(f), b = draw.coeff(f), c = draw.coeff(f);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) * c == a * c + b * c);
    }
    // r^2 written out equals the canonical radius, and r^2 * r^-2 is one
    LaurentCoeff sum(f);
    for (int i = 0; i < n; ++i) sum += LaurentCoeff::coordinate(f, i) * LaurentCoeff::coordinate(f, i);
    CHECK(sum == LaurentCoeff::radius_sq(f, 0));
    CHECK(sum * LaurentCoeff::radius_sq(f, 0, -1) == LaurentCoeff::constant(f, 1));
  }
}

TEST_CASE("operators: Weyl relation and derivative of the inverse radius") {
  const Frame f = Frame::checked(4, 2);
  const DiffOp d1 = DiffOp::partial(f, 0);
  const DiffOp x1 = DiffOp::multiplication(LaurentCoeff::coordinate(f, 0));
  const DiffOp expected = DiffOp::term(LaurentCoeff::coordinate(f, 0), d({0})) + DiffOp::identity(f);
  CHECK(d1 * x1 == expected);

  for (int i = 0; i < 2; ++i) {
    const LaurentCoeff inv = LaurentCoeff::radius_sq(f, 0, -1);
    const DiffOp lhs = DiffOp::partial(f, i) * DiffOp::multiplication(inv);
    const DiffOp rhs = DiffOp::term(inv, d({i})) -
                       DiffOp::multiplication(LaurentCoeff::coordinate(f, i) *
                                              LaurentCoeff::radius_sq(f, 0, -2) * Rational(2));
    CHECK(lhs == rhs);
  }
  const QuantumGenerators g = build_quantum(4, 2);
  CHECK(g.H * DiffOp::identity(f) == g.H);
  CHECK(DiffOp::identity(f) * g.H == g.H);
}

TEST_CASE("property: composition is associative and Jacobi holds") {
  testing::Draw draw(13);
  const Frame f = Frame::checked(4, 2);
  for (int trial = 0; trial < 8; ++trial) {
    const DiffOp p = draw.op(f), q = draw.op(f), r = draw.op(f);
    CHECK((p * q) * r == p * (q * r));
    CHECK((commutator(commutator(p, q), r) + commutator(commutator(q, r), p) +
           commutator(commutator(r, p), q))
              .is_zero());
  }
  const QuantumGenerators g = build_quantum(4, 2);
  const std::vector<const DiffOp*> pool{&g.H, &g.A, &g.B, &g.J2, &g.K2};
  for (int trial = 0; trial < 6; ++trial) {
    const DiffOp& p = *pool[draw.integer(0, 4)];
    const DiffOp& q = *pool[draw.integer(0, 4)];
    const DiffOp& r = *pool[draw.integer(0, 4)];
    CHECK((commutator(commutator(p, q), r) + commutator(commutator(q, r), p) +
           commutator(commutator(r, p), q))
              .is_zero());
  }
}

TEST_CASE("generators: Hamiltonian for (2,1) and index bookkeeping") {
  const Frame f = Frame::checked(2, 1);
  const QuantumGenerators g = build_quantum(2, 1);
  const LaurentCoeff h = param(f, Param::hbar), w = param(f, Param::omega);
  const LaurentCoeff x1 = LaurentCoeff::coordinate(f, 0), x2 = LaurentCoeff::coordinate(f, 1);
  DiffOp H = DiffOp::term(h * h * Rational(-1, 2), d({0, 0})) + DiffOp::term(h * h * Rational(-1, 2), d({1, 1}));
  H += DiffOp::multiplication(w * w * (x1 * x1 + x2 * x2) * Rational(1, 2));
  H += DiffOp::multiplication(param(f, Param::c1) * LaurentCoeff::radius_sq(f, 0, -1));
  H += DiffOp::multiplication(param(f, Param::c2) * LaurentCoeff::radius_sq(f, 1, -1));
  CHECK(g.H == H);
  CHECK(g.J.empty());
  CHECK(g.K.empty());
  CHECK(g.J2.is_zero());

  const QuantumGenerators g42 = build_quantum(4, 2);
  REQUIRE(g42.J.size() == 1);
  REQUIRE(g42.K.size() == 1);
  CHECK(g42.J_index[0] == std::pair{0, 1});
  CHECK(g42.K_index[0] == std::pair{2, 3});
  CHECK(g42.J[0] == rotation(Frame::checked(4, 2), 0, 1));
  // real rotation generators: the physical Casimir is minus the square
  CHECK(g42.J2 == -(g42.J[0] * g42.J[0]));

  // c1 = c2 = 0: isotropic oscillator
  const Frame f4 = Frame::checked(4, 2);
  const auto binding = [] {
    ParamBinding b;
    b.values[2] = Rational(0);
    b.values[3] = Rational(0);
    return b;
  }();
  DiffOp iso(f4);
  const LaurentCoeff h4 = param(f4, Param::hbar), w4 = param(f4, Param::omega);
  for (int i = 0; i < 4; ++i) {
    const LaurentCoeff xi = LaurentCoeff::coordinate(f4, i);
    iso += DiffOp::term(h4 * h4 * Rational(-1, 2), d({i, i}));
    iso += DiffOp::multiplication(w4 * w4 * xi * xi * Rational(1, 2));
  }
  CHECK(g42.H.substitute(binding) == iso);
}

TEST_CASE("integrals: commutators and the cubic C") {
  const QuantumGenerators g = build_quantum(4, 2);
  CHECK(commutator(g.H, g.A).is_zero());
  CHECK(commutator(g.H, g.B).is_zero());
  CHECK(commutator(g.A, g.A).is_zero());
  const DiffOp C = commutator(g.A, g.B);
  CHECK_FALSE(C.is_zero());
  CHECK(C.order() == 3);
  CHECK(commutator(g.H, C).is_zero());
}

TEST_CASE("rotations: independent so(n) oracle") {
  const Frame f = Frame::checked(6, 4);
  const QuantumGenerators g = build_quantum(6, 4);
  const DiffOp h = DiffOp::multiplication(param(f, Param::hbar));
  auto J = [&](int i, int j) { return rotation(f, i, j); };
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
          DiffOp rhs(f);
          if (delta(i, k)) rhs += J(j, l);
          if (delta(j, l)) rhs += J(i, k);
          if (delta(i, l)) rhs -= J(j, k);
          if (delta(j, k)) rhs -= J(i, l);
          CHECK(commutator(J(i, j), J(k, l)) == -(h * rhs));
        }
  for (std::size_t a = 0; a < g.J.size(); ++a) {
    CHECK(g.J[a] == J(g.J_index[a].first, g.J_index[a].second));
  }
}

TEST_CASE("verify: quantum algebra holds exactly") {
  for (auto [N, n] : {std::pair{4, 2}, {8, 4}}) {
    const VerificationReport rep = verify_q3(N, n);
    CHECK(rep.all_pass());
    for (const auto& e : rep.entries) {
      INFO(e.name);
      CHECK(e.residual_terms == 0);
      CHECK_FALSE(e.anchor.empty());
    }
    REQUIRE(rep.find("q3.[A,C]") != nullptr);
    REQUIRE(rep.find("casimir.K=K1") != nullptr);
  }
}

TEST_CASE("verify: structure-constant mutation is caught") {
  const QuantumGenerators g = build_quantum(4, 2);
  const DiffOp C = commutator(g.A, g.B);
  QuantumEvaluator ev(g, C, ParamBinding::symbolic());
  Relation ac = quantum_ac_relation(4, 2);
  CHECK(ev.residual(ac).is_zero());
  // N(N-4)/4 hbar^4 B -> N(N-3)/4 hbar^4 B
  ac.rhs[6].constant = Rational(4 * (4 - 3), 4);
  const DiffOp res = ev.residual(ac);
  CHECK_FALSE(res.is_zero());
  const auto fix = isolate_single_term(ev, ac, res);
  REQUIRE(fix.has_value());
  CHECK(fix->term_label == ac.rhs[6].label());
}

TEST_CASE("poisson: canonical pair and classical integrals") {
  const Frame f = Frame::checked(4, 2);
  CHECK(poisson_bracket(PhaseFn::coordinate(f, 0), PhaseFn::momentum(f, 0)) == PhaseFn::constant(f, 1));
  CHECK(poisson_bracket(PhaseFn::coordinate(f, 0), PhaseFn::momentum(f, 1)).is_zero());
  const ClassicalGenerators g = build_classical(4, 2);
  CHECK(poisson_bracket(g.H, g.A).is_zero());
  CHECK(poisson_bracket(g.H, g.B).is_zero());
  const PhaseFn C = poisson_bracket(g.A, g.B);
  CHECK(C.momentum_degree() == 3);
}

TEST_CASE("verify: classical algebra holds exactly") {
  for (auto [N, n] : {std::pair{4, 2}, {6, 3}}) {
    const VerificationReport rep = verify_qp3(N, n);
    CHECK(rep.all_pass());
    const IdentityCheck* k = rep.find("casimir.K=K1");
    REQUIRE(k != nullptr);
    CHECK(k->pass);
  }
}

TEST_CASE("verify: lowest hbar order of the quantum relations is the Poisson algebra") {
  const VerificationReport rep = verify_q3(4, 2);
  for (const char* name : {"limit.[A,C]", "limit.[B,C]", "limit.K=K1"}) {
    const IdentityCheck* e = rep.find(name);
    REQUIRE(e != nullptr);
    CHECK(e->pass);
  }
}

TEST_CASE("verify: sampled mode agrees with symbolic mode") {
  VerifyOptions opt;
  opt.sampled = true;
  opt.samples = 4;
  opt.seed = 5;
  const VerificationReport rep = verify_q3(4, 2, opt);
  CHECK(rep.all_pass());
  CHECK(rep.mode != verify_q3(4, 2).mode);
}
