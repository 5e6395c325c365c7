#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singosc/param_scalar.hpp"

namespace singosc {

/// Named generators a relation can mention. `one` is the identity.
enum class Gen : std::uint8_t { H, A, B, C, J2, K2 };

std::string gen_name(Gen g);

/// constant * params * word, or the anticommutator {left, right} when
/// `right` is non-empty. An empty word is the identity.
struct RelationTerm {
  Rational constant;
  ParamMono params{};
  std::vector<Gen> left;
  std::vector<Gen> right;

  ParamScalar coefficient() const { return ParamScalar::monomial(constant, params); }
  bool is_anticommutator() const { return !right.empty(); }
  std::string label() const;
};

/// LHS - RHS == 0, where the LHS is either a bracket of two generators or a
/// term list (used for the Casimir).
struct Relation {
  std::string name;
  std::string anchor;
  std::optional<std::pair<Gen, Gen>> bracket;
  std::vector<RelationTerm> lhs;
  std::vector<RelationTerm> rhs;
};

/// Quantum structure relations of Q(3) for concrete (N, n):
/// [A,C], [B,C], and the Casimir in generator form against its
/// central-element form.
Relation quantum_ac_relation(int N, int n);
Relation quantum_bc_relation(int N, int n);
Relation quantum_casimir_relation(int N, int n);

/// Poisson counterparts.
Relation classical_ac_relation();
Relation classical_bc_relation();
Relation classical_casimir_relation();

/// Lowest-order hbar content of a quantum relation mapped onto a Poisson
/// relation: brackets and the C factors each contribute i*hbar, so terms of
/// total hbar weight 2 survive, anticommutators double, and the common
/// factor -hbar^2 is removed. Words are sorted since the classical product
/// commutes.
struct ClassicalTerm {
  Rational constant;
  ParamMono params{};
  std::vector<Gen> word;
  friend bool operator==(const ClassicalTerm&, const ClassicalTerm&) = default;
  friend auto operator<=>(const ClassicalTerm& a, const ClassicalTerm& b) {
    if (auto c = a.word <=> b.word; c != 0) return c;
    return a.params <=> b.params;
  }
};

std::vector<ClassicalTerm> classical_limit_terms(const std::vector<RelationTerm>& terms);
/// Same normalisation applied to a classical term list (no hbar scaling).
std::vector<ClassicalTerm> canonical_classical_terms(const std::vector<RelationTerm>& terms);

/// Moves every term to one side (LHS - RHS) for comparison purposes.
std::vector<RelationTerm> residual_terms(const Relation& r);

}  // namespace singosc
