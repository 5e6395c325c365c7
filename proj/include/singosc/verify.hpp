#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "singosc/diff_op.hpp"
#include "singosc/generators.hpp"
#include "singosc/phase_fn.hpp"
#include "singosc/relations.hpp"

namespace singosc {

/// One identity checked as an exact zero.
struct IdentityCheck {
  std::string name;
  std::string anchor;
  bool pass = false;
  /// Monomial count of the residual (0 when it vanishes).
  std::size_t residual_terms = 0;
  double seconds = 0.0;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  int N = 0;
  int n = 0;
  std::string mode;
  std::vector<IdentityCheck> entries;
  std::vector<std::string> notes;

  bool all_pass() const;
  const IdentityCheck* find(const std::string& name) const;
};

struct VerifyOptions {
  /// Substitute random exact rationals for (hbar, omega, c1, c2) instead of
  /// keeping them symbolic. Sound with high probability by polynomial
  /// identity testing.
  bool sampled = false;
  int samples = 36;
  std::uint64_t seed = 1;
  /// Worker threads for independent identity checks (0 = hardware).
  unsigned threads = 1;
};

VerificationReport verify_q3(int N, int n, const VerifyOptions& options = {});
VerificationReport verify_qp3(int N, int n, const VerifyOptions& options = {});

/// Evaluates relation terms against concrete generator operators, caching
/// word products. Not thread-safe; use one instance per worker.
class QuantumEvaluator {
 public:
  QuantumEvaluator(const QuantumGenerators& g, const DiffOp& C, ParamBinding binding);

  const DiffOp& generator(Gen g) const;
  const DiffOp& word(const std::vector<Gen>& w);
  /// Operator part of a term (the word or anticommutator, no coefficient).
  DiffOp term_operator(const RelationTerm& t);
  DiffOp term_value(const RelationTerm& t);
  DiffOp side(const std::vector<RelationTerm>& terms);
  DiffOp lhs(const Relation& r);
  DiffOp residual(const Relation& r);
  const ParamBinding& binding() const { return binding_; }

 private:
  const QuantumGenerators& g_;
  const DiffOp& C_;
  ParamBinding binding_;
  DiffOp identity_;
  std::map<std::vector<Gen>, DiffOp> cache_;
};

class ClassicalEvaluator {
 public:
  ClassicalEvaluator(const ClassicalGenerators& g, const PhaseFn& C, ParamBinding binding);

  const PhaseFn& generator(Gen g) const;
  const PhaseFn& word(const std::vector<Gen>& w);
  PhaseFn term_operator(const RelationTerm& t);
  PhaseFn term_value(const RelationTerm& t);
  PhaseFn side(const std::vector<RelationTerm>& terms);
  PhaseFn lhs(const Relation& r);
  PhaseFn residual(const Relation& r);

 private:
  const ClassicalGenerators& g_;
  const PhaseFn& C_;
  ParamBinding binding_;
  PhaseFn identity_;
  std::map<std::vector<Gen>, PhaseFn> cache_;
};

/// Result of looking for a single-term explanation of a nonzero residual.
struct TermCorrection {
  std::string term_label;
  bool on_lhs = false;
  ParamScalar delta;
};

/// Finds a term t of the relation and a parameter polynomial delta with
/// residual == delta * operator(t). Returns nothing when no single term
/// explains the residual.
std::optional<TermCorrection> isolate_single_term(QuantumEvaluator& ev, const Relation& r,
                                                  const DiffOp& residual);

/// Unit mutations of every structure constant on the RHS of a relation:
/// each returned relation differs from the input in exactly one constant.
std::vector<std::pair<std::string, Relation>> unit_mutations(const Relation& r);

/// Draws `count` parameter bindings with positive exact rational values.
std::vector<ParamBinding> sample_bindings(int count, std::uint64_t seed);

}  // namespace singosc
