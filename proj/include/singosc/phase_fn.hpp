#pragma once

#include <map>
#include <string>

#include "singosc/diff_op.hpp"
#include "singosc/laurent.hpp"

namespace singosc {

/// Phase-space function: polynomial in p_1..p_N whose coefficients are
/// LaurentCoeff values in x. Keys are momentum exponent vectors.
class PhaseFn {
 public:
  using TermMap = std::map<MultiIndex, LaurentCoeff>;

  PhaseFn() = default;
  explicit PhaseFn(Frame frame) : frame_(frame) {}

  static PhaseFn from_coeff(const LaurentCoeff& c);
  static PhaseFn constant(Frame frame, const Rational& value);
  static PhaseFn coordinate(Frame frame, int i);
  static PhaseFn momentum(Frame frame, int i);

  Frame frame() const { return frame_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total momentum degree, -1 for zero.
  int momentum_degree() const;
  std::size_t term_count() const;

  PhaseFn derivative_x(int i) const;
  PhaseFn derivative_p(int i) const;
  PhaseFn substitute(const ParamBinding& binding) const;

  PhaseFn operator-() const;
  PhaseFn& operator+=(const PhaseFn& rhs);
  PhaseFn& operator-=(const PhaseFn& rhs);
  PhaseFn& operator*=(const Rational& s);

  friend PhaseFn operator+(PhaseFn a, const PhaseFn& b) { return a += b; }
  friend PhaseFn operator-(PhaseFn a, const PhaseFn& b) { return a -= b; }
  friend PhaseFn operator*(PhaseFn a, const Rational& s) { return a *= s; }
  friend PhaseFn operator*(const Rational& s, PhaseFn a) { return a *= s; }
  friend PhaseFn operator*(const PhaseFn& a, const PhaseFn& b);
  friend bool operator==(const PhaseFn& a, const PhaseFn& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PhaseFn& a, const PhaseFn& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(const MultiIndex& beta, LaurentCoeff c);

  Frame frame_;
  TermMap terms_;
};

/// {f, g} = sum_i (df/dx_i dg/dp_i - df/dp_i dg/dx_i)
PhaseFn poisson_bracket(const PhaseFn& f, const PhaseFn& g);

}  // namespace singosc
