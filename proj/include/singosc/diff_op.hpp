#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "singosc/laurent.hpp"

namespace singosc {

/// Derivative multi-index (or momentum exponent vector for PhaseFn).
using MultiIndex = std::array<std::uint8_t, kMaxDim>;

int total_order(const MultiIndex& beta);

/// Normal-ordered linear differential operator  sum_beta c_beta(x) d^beta
/// with LaurentCoeff coefficients. Zero coefficients are never stored, so
/// two operators are equal iff their term maps are equal.
class DiffOp {
 public:
  using TermMap = std::map<MultiIndex, LaurentCoeff>;

  DiffOp() = default;
  explicit DiffOp(Frame frame) : frame_(frame) {}

  static DiffOp identity(Frame frame);
  static DiffOp multiplication(const LaurentCoeff& f);
  /// c * d^beta
  static DiffOp term(const LaurentCoeff& c, const MultiIndex& beta);
  /// d/dx_i
  static DiffOp partial(Frame frame, int i);

  Frame frame() const { return frame_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest derivative order present, -1 for the zero operator.
  int order() const;
  /// Total number of (multi-index, coefficient monomial) pairs.
  std::size_t term_count() const;

  /// Applies the operator to a coefficient function.
  LaurentCoeff apply(const LaurentCoeff& f) const;
  DiffOp substitute(const ParamBinding& binding) const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& rhs);
  DiffOp& operator-=(const DiffOp& rhs);
  DiffOp& operator*=(const Rational& s);
  /// Left multiplication by a function: f * P.
  DiffOp& left_multiply(const LaurentCoeff& f);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Rational& s) { return a *= s; }
  friend DiffOp operator*(const Rational& s, DiffOp a) { return a *= s; }
  /// Normal-ordered composition P o Q.
  friend DiffOp operator*(const DiffOp& p, const DiffOp& q);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  std::string to_string() const;

 private:
  friend DiffOp compose(const DiffOp& p, const DiffOp& q, bool skip_leading);
  void add_term(const MultiIndex& beta, LaurentCoeff c);

  Frame frame_;
  TermMap terms_;
};

/// Composition helper; with skip_leading the gamma = 0 Leibniz terms
/// (the naive coefficient products) are omitted.
DiffOp compose(const DiffOp& p, const DiffOp& q, bool skip_leading = false);

/// P Q - Q P
DiffOp commutator(const DiffOp& p, const DiffOp& q);
/// P Q + Q P
DiffOp anticommutator(const DiffOp& p, const DiffOp& q);

}  // namespace singosc
