#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "singosc/param_scalar.hpp"
#include "singosc/rational.hpp"

namespace singosc {

/// Largest ambient dimension supported by the packed monomial layout.
inline constexpr int kMaxDim = 10;

/// Coordinate partition (N, n): block one is x_1..x_n, block two x_{n+1}..x_N.
struct Frame {
  int N = 0;
  int n = 0;

  static Frame checked(int N, int n);

  int block_size(int block) const { return block == 0 ? n : N - n; }
  int block_lead(int block) const { return block == 0 ? 0 : n; }
  int block_of(int i) const { return i < n ? 0 : 1; }

  friend bool operator==(const Frame& a, const Frame& b) { return a.N == b.N && a.n == b.n; }
  friend bool operator!=(const Frame& a, const Frame& b) { return !(a == b); }
};

/// Packed exponent vector of one coefficient monomial.
///
/// Slots 0..N-1 hold x exponents, kS1/kS2 hold the (signed) exponents of
/// r1^2 and r2^2, and the last four slots hold the parameter exponents. The
/// canonical basis keeps the first coordinate of each block at degree <= 1,
/// trading x_lead^2 for r^2 minus the other squares of that block, so every
/// element of Q[params][x][1/r1^2, 1/r2^2] has exactly one expansion.
struct Mono {
  static constexpr int kS1 = kMaxDim;
  static constexpr int kS2 = kMaxDim + 1;
  static constexpr int kParam0 = kMaxDim + 2;
  static constexpr int kSlots = kMaxDim + 2 + kParamCount;

  std::array<std::int8_t, kSlots> e{};

  int param_exp(Param p) const { return e[kParam0 + static_cast<int>(p)]; }

  friend Mono operator+(const Mono& a, const Mono& b) {
    Mono m;
    for (int k = 0; k < kSlots; ++k) m.e[k] = static_cast<std::int8_t>(a.e[k] + b.e[k]);
    return m;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
  friend bool operator<(const Mono& a, const Mono& b) { return a.e < b.e; }

  template <typename H>
  friend H AbslHashValue(H h, const Mono& m) {
    std::uint64_t w[2];
    static_assert(sizeof(w) == sizeof(m.e));
    std::memcpy(w, m.e.data(), sizeof(w));
    return H::combine(std::move(h), w[0], w[1]);
  }
};

class LaurentCoeff;

/// Hash-map accumulator that applies the canonical reduction as terms are
/// added. Used by every product routine; `take` produces a sorted value.
class LaurentAccumulator {
 public:
  explicit LaurentAccumulator(Frame frame) : frame_(frame) {}

  void add(const Mono& m, const Rational& c);
  void add(const LaurentCoeff& value, const Rational& scale = Rational(1));
  /// Adds scale * a * b.
  void add_product(const LaurentCoeff& a, const LaurentCoeff& b, const Rational& scale);
  bool empty() const { return terms_.empty(); }

  LaurentCoeff take();

 private:
  void insert(const Mono& m, const Rational& c);

  Frame frame_;
  absl::flat_hash_map<Mono, Rational> terms_;
};

/// Element of Q[hbar, omega, c1, c2][x_1..x_N][1/r1^2, 1/r2^2] in canonical
/// expansion (see Mono). Equality is structural.
class LaurentCoeff {
 public:
  using Term = std::pair<Mono, Rational>;

  LaurentCoeff() = default;
  explicit LaurentCoeff(Frame frame) : frame_(frame) {}

  static LaurentCoeff constant(Frame frame, const Rational& value);
  static LaurentCoeff scalar(Frame frame, const ParamScalar& value,
                             const ParamBinding& binding = ParamBinding::symbolic());
  static LaurentCoeff coordinate(Frame frame, int i);
  /// (r_block^2)^power, power may be negative.
  static LaurentCoeff radius_sq(Frame frame, int block, int power = 1);

  Frame frame() const { return frame_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  LaurentCoeff derivative(int i) const;
  LaurentCoeff substitute(const ParamBinding& binding) const;

  /// Powers (j, k) of the smallest denominator r1^{2j} r2^{2k}.
  std::pair<int, int> denominator_powers() const;
  /// Coefficient of hbar^power, as a coefficient free of hbar.
  LaurentCoeff hbar_coefficient(int power) const;

  LaurentCoeff operator-() const;
  LaurentCoeff& operator+=(const LaurentCoeff& rhs);
  LaurentCoeff& operator-=(const LaurentCoeff& rhs);
  LaurentCoeff& operator*=(const Rational& s);

  friend LaurentCoeff operator+(LaurentCoeff a, const LaurentCoeff& b) { return a += b; }
  friend LaurentCoeff operator-(LaurentCoeff a, const LaurentCoeff& b) { return a -= b; }
  friend LaurentCoeff operator*(const LaurentCoeff& a, const LaurentCoeff& b);
  friend LaurentCoeff operator*(LaurentCoeff a, const Rational& s) { return a *= s; }
  friend bool operator==(const LaurentCoeff& a, const LaurentCoeff& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentCoeff& a, const LaurentCoeff& b) { return !(a == b); }

  std::string to_string() const;

 private:
  friend class LaurentAccumulator;
  Frame frame_;
  std::vector<Term> terms_;
};

}  // namespace singosc
