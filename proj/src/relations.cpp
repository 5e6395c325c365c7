#include "singosc/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace singosc {

namespace {

ParamMono mono(int hbar, int omega = 0, int c1 = 0, int c2 = 0) {
  return ParamMono{static_cast<std::uint8_t>(hbar), static_cast<std::uint8_t>(omega),
                   static_cast<std::uint8_t>(c1), static_cast<std::uint8_t>(c2)};
}

RelationTerm t(Rational k, ParamMono p, std::vector<Gen> word) {
  return RelationTerm{std::move(k), p, std::move(word), {}};
}

RelationTerm anti(Rational k, ParamMono p, std::vector<Gen> left, std::vector<Gen> right) {
  return RelationTerm{std::move(k), p, std::move(left), std::move(right)};
}

using enum Gen;

std::vector<ClassicalTerm> merge(std::vector<ClassicalTerm> terms) {
  std::map<std::pair<std::vector<Gen>, ParamMono>, Rational> acc;
  for (auto& ct : terms) acc[{ct.word, ct.params}] += ct.constant;
  std::vector<ClassicalTerm> out;
  for (auto& [key, c] : acc) {
    if (!c.is_zero()) out.push_back(ClassicalTerm{c, key.second, key.first});
  }
  return out;
}

}  // namespace

std::string gen_name(Gen g) {
  switch (g) {
    case H: return "H";
    case A: return "A";
    case B: return "B";
    case C: return "C";
    case J2: return "J2";
    case K2: return "K2";
  }
  return "?";
}

std::string RelationTerm::label() const {
  std::ostringstream os;
  os << coefficient().to_string() << " * ";
  auto word = [&](const std::vector<Gen>& w) {
    if (w.empty()) {
      os << "1";
      return;
    }
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "." : "") << gen_name(w[i]);
  };
  if (is_anticommutator()) {
    os << "{";
    word(left);
    os << ", ";
    word(right);
    os << "}";
  } else {
    word(left);
  }
  return os.str();
}

Relation quantum_ac_relation(int N, int n) {
  Relation r;
  r.name = "q3.[A,C]";
  r.anchor = "quadratic-algebra:[A,C]";
  r.bracket = std::pair{A, C};
  r.rhs = {
      anti(2, mono(2), {A}, {B}),
      t(-1, mono(2), {J2, H}),
      t(1, mono(2), {K2, H}),
      t(-2, mono(2, 0, 1), {H}),
      t(2, mono(2, 0, 0, 1), {H}),
      t(Rational((N - 4) * (N - 2 * n), 4), mono(4), {H}),
      t(Rational(N * (N - 4), 4), mono(4), {B}),
  };
  return r;
}

Relation quantum_bc_relation(int N, int n) {
  Relation r;
  r.name = "q3.[B,C]";
  r.anchor = "quadratic-algebra:[B,C]";
  r.bracket = std::pair{B, C};
  r.rhs = {
      t(-2, mono(2), {B, B}),
      t(2, mono(2), {H, H}),
      t(-16, mono(2, 2), {A}),
      t(4, mono(2, 2), {J2}),
      t(4, mono(2, 2), {K2}),
      t(8, mono(2, 2, 1), {}),
      t(8, mono(2, 2, 0, 1), {}),
      t(-2 * n * (N - n), mono(4, 2), {}),
  };
  return r;
}

Relation quantum_casimir_relation(int N, int n) {
  Relation r;
  r.name = "casimir.K=K1";
  r.anchor = "casimir:generator-form=central-form";
  r.lhs = {
      t(1, mono(0), {C, C}),
      anti(-2, mono(2), {A}, {B, B}),
      t(Rational(16 - N * (N - 4), 4), mono(4), {B, B}),
      t(2, mono(2), {J2, H, B}),
      t(-2, mono(2), {K2, H, B}),
      t(4, mono(2, 0, 1), {H, B}),
      t(-4, mono(2, 0, 0, 1), {H, B}),
      t(Rational(-(N - 4) * (N - 2 * n), 2), mono(4), {H, B}),
      t(-16, mono(2, 2), {A, A}),
      t(16, mono(2, 2, 1), {A}),
      t(16, mono(2, 2, 0, 1), {A}),
      t(-4 * n * (N - n), mono(4, 2), {A}),
      t(8, mono(2, 2), {J2, A}),
      t(8, mono(2, 2), {K2, A}),
      t(4, mono(2), {H, H, A}),
  };
  r.rhs = {
      t(2, mono(2), {J2, H, H}),
      t(2, mono(2), {K2, H, H}),
      t(4, mono(2, 0, 1), {H, H}),
      t(4, mono(2, 0, 0, 1), {H, H}),
      t(Rational(-(4 * (N - 4) - (N - 2 * n) * (N - 2 * n)), 4), mono(4), {H, H}),
      t(1, mono(2, 2), {J2, J2}),
      t(1, mono(2, 2), {K2, K2}),
      t(-2, mono(2, 2), {J2, K2}),
      t(4, mono(2, 2, 1), {J2}),
      t(-4, mono(2, 2, 0, 1), {J2}),
      t(-(N - 4) * (N - n), mono(4, 2), {J2}),
      t(-4, mono(2, 2, 1), {K2}),
      t(4, mono(2, 2, 0, 1), {K2}),
      t(-n * (N - 4), mono(4, 2), {K2}),
      t(4, mono(2, 2, 2), {}),
      t(-8, mono(2, 2, 1, 1), {}),
      t(4, mono(2, 2, 0, 2), {}),
      t(-2 * (N - n) * (N - 4), mono(4, 2, 1), {}),
      t(-2 * n * (N - 4), mono(4, 2, 0, 1), {}),
      t(n * (N - n) * (N - 4), mono(6, 2), {}),
  };
  return r;
}

Relation classical_ac_relation() {
  Relation r;
  r.name = "qp3.{A,C}";
  r.anchor = "poisson-algebra:{A,C}";
  r.bracket = std::pair{A, C};
  r.rhs = {
      t(-4, mono(0), {A, B}),
      t(1, mono(0), {J2, H}),
      t(-1, mono(0), {K2, H}),
      t(2, mono(0, 0, 1), {H}),
      t(-2, mono(0, 0, 0, 1), {H}),
  };
  return r;
}

Relation classical_bc_relation() {
  Relation r;
  r.name = "qp3.{B,C}";
  r.anchor = "poisson-algebra:{B,C}";
  r.bracket = std::pair{B, C};
  r.rhs = {
      t(2, mono(0), {B, B}),
      t(-2, mono(0), {H, H}),
      t(16, mono(0, 2), {A}),
      t(-4, mono(0, 2), {J2}),
      t(-4, mono(0, 2), {K2}),
      t(-8, mono(0, 2, 1), {}),
      t(-8, mono(0, 2, 0, 1), {}),
  };
  return r;
}

Relation classical_casimir_relation() {
  Relation r;
  r.name = "casimir.K=K1";
  r.anchor = "poisson-casimir:generator-form=central-form";
  r.lhs = {
      t(1, mono(0), {C, C}),
      t(4, mono(0), {A, B, B}),
      t(-2, mono(0), {J2, H, B}),
      t(2, mono(0), {K2, H, B}),
      t(-4, mono(0, 0, 1), {H, B}),
      t(4, mono(0, 0, 0, 1), {H, B}),
      t(16, mono(0, 2), {A, A}),
      t(-16, mono(0, 2, 1), {A}),
      t(-16, mono(0, 2, 0, 1), {A}),
      t(-8, mono(0, 2), {J2, A}),
      t(-8, mono(0, 2), {K2, A}),
      t(-4, mono(0), {H, H, A}),
  };
  r.rhs = {
      t(-2, mono(0), {J2, H, H}),
      t(-2, mono(0), {K2, H, H}),
      t(-4, mono(0, 0, 1), {H, H}),
      t(-4, mono(0, 0, 0, 1), {H, H}),
      t(-1, mono(0, 2), {J2, J2}),
      t(-1, mono(0, 2), {K2, K2}),
      t(2, mono(0, 2), {J2, K2}),
      t(-4, mono(0, 2, 1), {J2}),
      t(4, mono(0, 2, 0, 1), {J2}),
      t(4, mono(0, 2, 1), {K2}),
      t(-4, mono(0, 2, 0, 1), {K2}),
      t(-4, mono(0, 2, 2), {}),
      t(8, mono(0, 2, 1, 1), {}),
      t(-4, mono(0, 2, 0, 2), {}),
  };
  return r;
}

std::vector<ClassicalTerm> classical_limit_terms(const std::vector<RelationTerm>& terms) {
  std::vector<ClassicalTerm> out;
  for (const auto& term : terms) {
    std::vector<Gen> word = term.left;
    word.insert(word.end(), term.right.begin(), term.right.end());
    const int c_count = static_cast<int>(std::count(word.begin(), word.end(), C));
    const int weight = term.params[0] + c_count;
    if (weight != 2 || term.constant.is_zero()) continue;
    // Each C carries a factor i; the relation as a whole carries -hbar^2.
    Rational k = term.constant;
    if (c_count % 4 == 2) k = -k;
    if (term.is_anticommutator()) k *= Rational(2);
    k = -k;
    ParamMono p = term.params;
    p[0] = 0;
    std::sort(word.begin(), word.end());
    out.push_back(ClassicalTerm{k, p, word});
  }
  return merge(std::move(out));
}

std::vector<ClassicalTerm> canonical_classical_terms(const std::vector<RelationTerm>& terms) {
  std::vector<ClassicalTerm> out;
  for (const auto& term : terms) {
    std::vector<Gen> word = term.left;
    word.insert(word.end(), term.right.begin(), term.right.end());
    std::sort(word.begin(), word.end());
    Rational k = term.constant;
    if (term.is_anticommutator()) k *= Rational(2);
    out.push_back(ClassicalTerm{k, term.params, word});
  }
  return merge(std::move(out));
}

std::vector<RelationTerm> residual_terms(const Relation& r) {
  std::vector<RelationTerm> out = r.lhs;
  for (auto term : r.rhs) {
    term.constant = -term.constant;
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace singosc
