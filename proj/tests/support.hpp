#pragma once

#include <cstdint>
#include <random>

#include "singosc/diff_op.hpp"
#include "singosc/laurent.hpp"
#include "singosc/param_scalar.hpp"
#include "singosc/rational.hpp"

namespace testing {

using namespace singosc;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int num_lo, int num_hi, int den_hi = 9) {
    return Rational(integer(num_lo, num_hi), integer(1, den_hi));
  }

  /// Uniform-ish rational in [lo, hi] with small denominator.
  Rational rational_in(int lo, int hi, int den = 12) {
    const int d = integer(1, den);
    return Rational(integer(lo * d, hi * d), d);
  }

  ParamScalar scalar(int terms = 3) {
    ParamScalar s;
    for (int t = 0; t < terms; ++t) {
      ParamMono e{};
      for (auto& x : e) x = static_cast<std::uint8_t>(integer(0, 2));
      s += ParamScalar::monomial(rational(-5, 5), e);
    }
    return s;
  }

  LaurentCoeff coeff(Frame f, int terms = 3) {
    LaurentCoeff c(f);
    for (int t = 0; t < terms; ++t) {
      LaurentCoeff m = LaurentCoeff::scalar(f, scalar(1));
      for (int i = 0; i < f.N; ++i) {
        for (int k = integer(0, 2); k > 0; --k) m = m * LaurentCoeff::coordinate(f, i);
      }
      m = m * LaurentCoeff::radius_sq(f, 0, integer(-1, 1));
      m = m * LaurentCoeff::radius_sq(f, 1, integer(-1, 1));
      c += m;
    }
    return c;
  }

  DiffOp op(Frame f, int terms = 2, int max_order = 2) {
    DiffOp p(f);
    for (int t = 0; t < terms; ++t) {
      MultiIndex beta{};
      for (int k = integer(0, max_order); k > 0; --k) beta[integer(0, f.N - 1)] += 1;
      p += DiffOp::term(coeff(f, 2), beta);
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
