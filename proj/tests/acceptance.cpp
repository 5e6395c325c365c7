// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "singosc/generators.hpp"
#include "singosc/levels.hpp"
#include "singosc/qalg.hpp"
#include "singosc/radial.hpp"
#include "singosc/relations.hpp"
#include "singosc/verify.hpp"
#include "support.hpp"

using namespace singosc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << " first failure: " << why << ";";
    pass = false;
  }
};

const std::vector<std::pair<int, int>> kPairs{{2, 1}, {4, 1}, {4, 2}, {5, 2}, {6, 3}, {8, 4}};

// random (N, n, l_n, l_Nn, hbar, omega, c1, c2) with l in range per block
CentralEigs draw_eigs(testing::Draw& d, int l_hi, bool positive_m) {
  for (;;) {
    const int N = d.integer(2, 8);
    const int n = d.integer(1, N - 1);
    const int ln = n == 1 ? d.integer(0, 1) : d.integer(0, l_hi);
    const int lNn = N - n == 1 ? d.integer(0, 1) : d.integer(0, l_hi);
    const CentralEigs ce = CentralEigs::make(N, n, ln, lNn, d.rational(1, 4, 3), d.rational(1, 4, 3),
                                             d.rational_in(0, 4), d.rational_in(0, 4));
    if (!positive_m) return ce;
    const MQuantum m = m_values(ce);
    if (m.m1 > 0 && m.m2 > 0) return ce;
  }
}

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  int identities = 0;
  for (auto [N, n] : kPairs) {
    const auto t0 = Clock::now();
    const VerificationReport rep = verify_q3(N, n);
    const double t = seconds_since(t0);
    worst = std::max(worst, t);
    for (const auto& e : rep.entries) {
      if (e.name.rfind("casimir", 0) == 0 || e.name.rfind("limit", 0) == 0) continue;
      ++identities;
      if (!e.pass) o.fail("(" + std::to_string(N) + "," + std::to_string(n) + ") " + e.name);
    }
    for (const char* needed : {"q3.C=[A,B]", "q3.[A,C]", "q3.[B,C]", "central.[A,J2]", "so(n).brackets"}) {
      if (!rep.find(needed)) o.fail(std::string("missing ") + needed);
    }
    if (t >= 300) o.fail("runtime");
  }
  o.detail << " " << identities << " identities over 6 pairs exact zero, symbolic parameters, slowest pair "
           << worst << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int corrections = 0;
  for (auto [N, n] : kPairs) {
    const VerificationReport rep = verify_q3(N, n);
    const IdentityCheck* k = rep.find("casimir.K=K1");
    if (!k) {
      o.fail("missing casimir entry");
      continue;
    }
    if (!k->pass) {
      // a single-term explanation is allowed once
      const QuantumGenerators g = build_quantum(N, n);
      const DiffOp C = commutator(g.A, g.B);
      QuantumEvaluator ev(g, C, ParamBinding::symbolic());
      const Relation rel = quantum_casimir_relation(N, n);
      if (isolate_single_term(ev, rel, ev.residual(rel))) {
        ++corrections;
      } else {
        o.fail("casimir residual not a single term at (" + std::to_string(N) + "," + std::to_string(n) + ")");
      }
    }
  }
  if (corrections > 1) o.fail("more than one correction");
  o.detail << " generator form minus central form is the zero operator; corrections used: " << corrections;
  return o;
}

Outcome criterion3() {
  Outcome o;
  int identities = 0;
  for (auto [N, n] : {std::pair{4, 2}, {6, 3}}) {
    const VerificationReport rep = verify_qp3(N, n);
    identities += static_cast<int>(rep.entries.size());
    for (const auto& e : rep.entries) {
      if (!e.pass) o.fail(e.name);
    }
    for (const char* needed : {"qp3.{A,C}", "qp3.{B,C}", "casimir.K=K1", "so(n).brackets"}) {
      if (!rep.find(needed)) o.fail(std::string("missing ") + needed);
    }
  }
  o.detail << " " << identities << " Poisson identities exact zero at (4,2), (6,3)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  testing::Draw d(404);
  int agree = 0, bare_rejected = 0;
  const int tuples = 24;
  for (int t = 0; t < tuples; ++t) {
    const CentralEigs ce = draw_eigs(d, 5, false);
    const Rational u = d.rational(-20, 20, 7), E = d.rational(1, 40, 7);
    if (structure_forms_agree(ce, u, E)) {
      ++agree;
    } else {
      o.fail("tuple " + std::to_string(t));
    }
    FactoredOptions bare;
    bare.reading = LastFactor::bare_x;
    if (!structure_forms_agree(ce, u, E, bare)) ++bare_rejected;
  }
  o.detail << " raw == factorized as degree-6 polynomials for " << agree << "/" << tuples
           << " tuples; bare-x last factor rejected on " << bare_rejected;
  return o;
}

Outcome criterion5() {
  Outcome o;
  testing::Draw d(505);
  double worst_rel = 0, worst_t = 0;
  int exact = 0;
  for (int t = 0; t < 50; ++t) {
    const int N = d.integer(2, 8), n = d.integer(1, N - 1);
    const int l1 = n == 1 ? d.integer(0, 1) : d.integer(0, 3);
    const int l2 = N - n == 1 ? d.integer(0, 1) : d.integer(0, 3);
    const Rational hbar = d.rational(1, 3, 2), omega = d.rational(1, 3, 2);
    // a fifth of the draws sit on c = 0 exactly
    const Rational c1 = d.integer(0, 4) ? d.rational_in(0, 4) : Rational(0);
    const Rational c2 = d.integer(0, 4) ? d.rational_in(0, 4) : Rational(0);
    const int p = d.integer(0, 4);
    const int N1 = d.integer(0, p), N2 = p - N1;
    ComponentSpec s1{n, c1, l1, hbar, omega}, s2{N - n, c2, l2, hbar, omega};
    const RadialMode a = closed_form(s1, N1), b = closed_form(s2, N2);
    const TotalEnergy te = total_energy(a, b);
    const CentralEigs ce = CentralEigs::make(N, n, l1, l2, hbar, omega, c1, c2);
    const int e1 = s1.even_free_line() ? -1 : 1, e2 = s2.even_free_line() ? -1 : 1;
    const UnirrepSolution alg = solve_unirrep(1, e1, e2, p, ce);
    const MQuantum mq = m_values(ce);
    // m = 2 alpha: exact on the squares, exact on E when rational
    auto alpha_sq = [](const ComponentSpec& s) {
      const Rational lam = Rational(s.l) + Rational(s.m - 2, 2);
      return lam * lam + Rational(2) * s.c_reduced();
    };
    if (mq.m1_sq != Rational(4) * alpha_sq(s1) || mq.m2_sq != Rational(4) * alpha_sq(s2)) o.fail("m^2 != 4 alpha^2");
    if (te.energy_exact && alg.E_exact) {
      ++exact;
      if (*te.energy_exact != *alg.E_exact) o.fail("exact energy mismatch");
    } else if (std::abs(te.energy - alg.E.convert_to<double>()) > 1e-12 * te.energy) {
      o.fail("energy mismatch");
    }
    double fd_sum = 0;
    for (const auto& [spec, Nr] : {std::pair{s1, N1}, {s2, N2}}) {
      const auto t0 = Clock::now();
      const FdResult fd = fd_eigenvalues(spec, {}, Nr + 1);
      worst_t = std::max(worst_t, seconds_since(t0));
      fd_sum += fd.energies[Nr];
    }
    const double rel = std::abs(fd_sum - te.energy) / te.energy;
    worst_rel = std::max(worst_rel, rel);
    if (rel > 1e-6) o.fail("FD off by " + std::to_string(rel));
  }
  if (worst_t >= 10) o.fail("FD runtime");
  o.detail << " 50 tuples: algebraic == closed form (" << exact << " exactly rational), FD max rel "
           << worst_rel << ", slowest component " << worst_t << " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int rows = 0, levels = 0;
  for (int N : {4, 8}) {
    const HarmonicReport h = harmonic_limit_check(N, 6);
    const CountReport c = oscillator_count_check(N, 6);
    rows += static_cast<int>(h.rows.size() + c.rows.size());
    if (!h.all_pass()) o.fail("harmonic energies N=" + std::to_string(N));
    if (!c.all_pass()) o.fail("counts N=" + std::to_string(N));
    for (int n = 1; n <= N - 1; ++n) {
      const LevelTable t = enumerate_levels(N, n, 0, 0, Rational(N, 2) + 6);
      if (t.levels.size() != 7) o.fail("level count");
      for (std::size_t l = 0; l < t.levels.size(); ++l) {
        ++levels;
        const Level& lv = t.levels[l];
        if (!lv.E_exact || *lv.E_exact != Rational(static_cast<int>(l)) + Rational(N, 2)) o.fail("level energy");
        if (lv.degeneracy != binomial(static_cast<int>(l) + N - 1, N - 1)) o.fail("level degeneracy");
      }
    }
  }
  o.detail << " N in {4,8}, l <= 6, all n: " << rows << " sector rows and " << levels
           << " levels equal hbar omega (l + N/2) with C(l+N-1, N-1) states";
  return o;
}

Outcome criterion7() {
  Outcome o;
  testing::Draw d(707);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const CentralEigs ce = draw_eigs(d, 5, true);
    for (int set : {1, 3}) {
      for (int p = 0; p <= 10; ++p) {
        const UnirrepSolution s = solve_unirrep(set, 1, 1, p, ce);
        ++checked;
        if (!s.boundary_ok) o.fail("boundary, set " + std::to_string(set));
        if (!s.positive) o.fail("positivity, set " + std::to_string(set));
        // independent re-check of the tabulated values
        if (abs(s.phi.front()) > kRealZeroTol || abs(s.phi.back()) > kRealZeroTol) o.fail("phi ends");
        for (int x = 1; x <= p; ++x) {
          if (!(s.phi[x] > 0)) o.fail("phi(x) <= 0");
        }
      }
    }
  }
  o.detail << " 100 tuples x p = 0..10 x Sets {1,3}: " << checked
           << " solutions with Phi(0) = Phi(p+1) = 0 and Phi > 0 inside";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int mutants = 0, killed = 0;
  for (auto [N, n] : {std::pair{4, 2}, {6, 3}}) {
    const QuantumGenerators g = build_quantum(N, n);
    const DiffOp C = commutator(g.A, g.B);
    QuantumEvaluator ev(g, C, ParamBinding::symbolic());
    for (const Relation& rel : {quantum_ac_relation(N, n), quantum_bc_relation(N, n)}) {
      if (!ev.residual(rel).is_zero()) o.fail("unmutated relation fails");
      for (const auto& [label, mutant] : unit_mutations(rel)) {
        ++mutants;
        if (!ev.residual(mutant).is_zero()) {
          ++killed;
        } else {
          o.fail(rel.name + " survived: " + label);
        }
      }
    }
  }
  testing::Draw d(808);
  for (int t = 0; t < 5; ++t) {
    const CentralEigs ce = draw_eigs(d, 4, false);
    const Rational u = d.rational(-9, 9), E = d.rational(1, 30);
    for (int root = 0; root < 6; ++root) {
      FactoredOptions opt;
      opt.root_shift[root] = 1;
      ++mutants;
      if (!structure_forms_agree(ce, u, E, opt)) {
        ++killed;
      } else {
        o.fail("root mutation survived");
      }
    }
  }
  o.detail << " " << killed << "/" << mutants << " unit mutations detected (structure constants at (4,2), (6,3); factor roots)";
  return o;
}

Outcome criterion9() {
  Outcome o;
  int vectors = 0, norms = 0;
  double worst_err = 0;
  const std::vector<ComponentSpec> specs{{2, 0, 0, 1, 1},
                                         {1, 0, 0, 1, 1},
                                         {1, Rational(1, 3), 1, 1, 1},
                                         {3, Rational(5, 2), 1, Rational(1, 2), 2},
                                         {5, Rational(7, 3), 2, 1, Rational(3, 2)},
                                         {8, 4, 3, 1, 1}};
  for (const ComponentSpec& s : specs) {
    const FdModes modes = fd_eigenvectors(s, {}, 5);
    for (int k = 0; k < 5; ++k) {
      ++vectors;
      if (modes.sign_changes[k] != k) o.fail("FD eigenvector sign changes");
    }
    for (int Nr = 0; Nr <= 4; ++Nr) {
      const RadialMode mode = closed_form(s, Nr);
      for (WaveNorm w : {WaveNorm::unit, WaveNorm::raw_prefactor}) {
        const NormCheck nc = norm_integral(mode, w, 0.0, 1e-6);
        ++norms;
        worst_err = std::max(worst_err, nc.error_estimate / std::max(1.0, std::abs(nc.value)));
        if (!nc.converged || !std::isfinite(nc.value) || nc.value <= 0) o.fail("norm quadrature");
        if (w == WaveNorm::unit && std::abs(nc.value - 1) > 1e-6) o.fail("unit norm");
      }
      if (wavefunction_sign_changes(mode) != Nr) o.fail("closed-form sign changes");
    }
  }
  o.detail << " " << vectors << " FD eigenvectors with k sign changes; " << norms
           << " wavefunction norms finite and converged (max relative error estimate " << worst_err << ")";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact quadratic-algebra relations", criterion1},
      {"Casimir generator form equals central form", criterion2},
      {"classical Poisson algebra", criterion3},
      {"structure-function raw/factorized equivalence", criterion4},
      {"algebraic, closed-form and finite-difference spectra agree", criterion5},
      {"harmonic limit energies and counts", criterion6},
      {"unirrep boundary conditions and positivity", criterion7},
      {"mutation sensitivity", criterion8},
      {"oscillation and normalization", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu: %s  %s -%s (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
