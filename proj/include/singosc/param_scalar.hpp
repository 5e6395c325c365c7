#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singosc/rational.hpp"

namespace singosc {

/// The four model parameters that appear as polynomial indeterminates.
enum class Param : std::uint8_t { hbar = 0, omega = 1, c1 = 2, c2 = 3 };

inline constexpr int kParamCount = 4;

/// Exponents of (hbar, omega, c1, c2).
using ParamMono = std::array<std::uint8_t, kParamCount>;

/// Concrete values for some or all parameters. An unset entry keeps the
/// parameter symbolic.
struct ParamBinding {
  std::array<std::optional<Rational>, kParamCount> values{};

  static ParamBinding symbolic() { return {}; }
  static ParamBinding numeric(Rational hbar, Rational omega, Rational c1, Rational c2);

  bool is_symbolic(Param p) const { return !values[static_cast<int>(p)].has_value(); }
  const std::optional<Rational>& operator[](Param p) const { return values[static_cast<int>(p)]; }
};

/// Sparse polynomial in (hbar, omega, c1, c2) with exact rational
/// coefficients. Terms are kept sorted by exponent tuple with no zero
/// coefficients, so structural equality is value equality.
class ParamScalar {
 public:
  using Term = std::pair<ParamMono, Rational>;

  ParamScalar() = default;
  ParamScalar(Rational constant);  // NOLINT(implicit)
  ParamScalar(std::int64_t constant) : ParamScalar(Rational(constant)) {}  // NOLINT(implicit)

  static ParamScalar symbol(Param p, unsigned power = 1);
  static ParamScalar monomial(Rational coef, const ParamMono& exps);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree in hbar, or -1 for zero.
  int hbar_degree_min() const;

  /// Substitutes bound parameters; the result keeps the symbolic ones.
  ParamScalar substitute(const ParamBinding& binding) const;
  /// Full evaluation; throws if any parameter with nonzero exponent is unbound.
  Rational evaluate(const ParamBinding& binding) const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& rhs);
  ParamScalar& operator-=(const ParamScalar& rhs);
  ParamScalar& operator*=(const ParamScalar& rhs);

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  static ParamScalar from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

ParamScalar pow(const ParamScalar& base, unsigned exponent);

}  // namespace singosc
