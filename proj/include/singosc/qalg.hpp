#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "singosc/rational.hpp"

namespace singosc {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& r);

/// Tolerance for "equals zero" whenever a quantity is only known in Real.
inline const Real kRealZeroTol = Real("1e-30");

/// Eigenvalues of the central elements in one (p, l_n, l_Nn) sector.
struct CentralEigs {
  int N = 0;
  int n = 0;
  int l_n = 0;
  int l_Nn = 0;
  Rational hbar{1};
  Rational omega{1};
  Rational c1{0};
  Rational c2{0};
  Rational j2{0};
  Rational k2{0};

  /// For one-dimensional blocks l is a parity label in {0, 1} and the
  /// angular Casimir vanishes.
  static CentralEigs make(int N, int n, int l_n, int l_Nn, Rational hbar = 1, Rational omega = 1,
                          Rational c1 = 0, Rational c2 = 0);
};

/// Angular eigenvalue l(l+m-2) of a block of dimension m (0 when m == 1).
Rational angular_eigenvalue(int m, int l);

struct MQuantum {
  Rational m1_sq;
  Rational m2_sq;
  std::optional<Rational> m1_exact;
  std::optional<Rational> m2_exact;
  Real m1;
  Real m2;
  bool exact() const { return m1_exact && m2_exact; }
};

MQuantum m_values(const CentralEigs& ce);

/// Exact element a + b*m1 + c*m2 + d*m1*m2 of Q(sqrt(M1), sqrt(M2)).
/// Rational square roots and dependent radicands are folded so the
/// representation stays unique.
class Surd {
 public:
  struct Field {
    Rational M1;
    Rational M2;
    std::optional<Rational> r1;
    std::optional<Rational> r2;
    /// m2 == k * m1 when M1*M2 is a rational square.
    std::optional<Rational> k;
  };

  Surd() = default;
  Surd(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  Surd(std::int64_t a) : a_(a) {}         // NOLINT(implicit)

  static std::shared_ptr<const Field> make_field(const Rational& M1, const Rational& M2);
  static Surd m1(const std::shared_ptr<const Field>& f);
  static Surd m2(const std::shared_ptr<const Field>& f);

  bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  const Rational& rational_part() const { return a_; }
  Real to_real() const;
  std::string to_string() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  Rational c_{0};
  Rational d_{0};
  std::shared_ptr<const Field> f_;
};

/// Which reading of the final factor of the factorized form to use.
enum class LastFactor {
  plus_u,     // (x + u - (E + hbar omega)/(2 hbar omega))
  bare_x      // (x - (E + hbar omega)/(2 hbar omega)), without u
};

struct FactoredOptions {
  LastFactor reading = LastFactor::plus_u;
  /// Added to each of the six roots (in y = x + u): the four m-roots
  /// (2+m1+m2)/4, (2-m1+m2)/4, (2+m1-m2)/4, (2-m1-m2)/4, then
  /// (-E+hbar omega)/(2 hbar omega) and (E+hbar omega)/(2 hbar omega).
  std::array<Rational, 6> root_shift{};
};

/// Leading constant of the factorized form, -12582912 hbar^18 omega^2.
Rational factored_leading(const CentralEigs& ce);

/// Roots in y = x + u, in the FactoredOptions order (shifts applied).
template <class T>
std::array<T, 6> factored_roots(const CentralEigs& ce, const T& m1, const T& m2, const T& E,
                                const FactoredOptions& opt = {});

/// Coefficients (ascending powers of x) of the structure function.
template <class T>
std::vector<T> structure_poly_raw(const CentralEigs& ce, const T& u, const T& E);
template <class T>
std::vector<T> structure_poly_factored(const CentralEigs& ce, const T& m1, const T& m2, const T& u,
                                       const T& E, const FactoredOptions& opt = {});

template <class T>
T poly_eval(const std::vector<T>& coeffs, const T& x);

template <class T>
T structure_fn_raw(const T& x, const T& u, const T& E, const CentralEigs& ce) {
  return poly_eval(structure_poly_raw(ce, u, E), x);
}
template <class T>
T structure_fn_factored(const T& x, const T& u, const T& E, const T& m1, const T& m2,
                        const CentralEigs& ce, const FactoredOptions& opt = {}) {
  return poly_eval(structure_poly_factored(ce, m1, m2, u, E, opt), x);
}

/// Exact polynomial comparison of the two forms for rational (u, E).
/// m1, m2 enter through Q(sqrt(m1^2), sqrt(m2^2)).
bool structure_forms_agree(const CentralEigs& ce, const Rational& u, const Rational& E,
                           const FactoredOptions& opt = {});

struct UnirrepSolution {
  int set_id = 0;
  int eps1 = 1;
  int eps2 = 1;
  int p = 0;
  Real u;
  Real E;
  std::optional<Rational> u_exact;
  std::optional<Rational> E_exact;
  /// Phi(x) for x = 0..p+1 (factorized form).
  std::vector<Real> phi;
  bool boundary_ok = false;
  bool positive = false;
  bool energy_positive = false;
  bool admissible = false;
  std::optional<int> failing_x;
  std::string note;
};

/// Closed-form u and E of Sets 1-3 for every sign pair, with Phi tabulated
/// and admissibility decided from the tabulated values.
std::vector<UnirrepSolution> solve_unirreps(int p, const CentralEigs& ce,
                                            const FactoredOptions& opt = {});

/// One solution for an explicit set and sign pair.
UnirrepSolution solve_unirrep(int set_id, int eps1, int eps2, int p, const CentralEigs& ce,
                              const FactoredOptions& opt = {});

/// Sign with which m enters the harmonic-limit energy of a block of
/// dimension m at c == 0: -1 only for the even sector of a 1D block.
int harmonic_sign(int m, int l);

struct HarmonicRow {
  int n = 0;
  int p = 0;
  int l_n = 0;
  int l_Nn = 0;
  int l = 0;
  Rational E;
  Rational expected;
  bool pass = false;
};

struct HarmonicReport {
  int N = 0;
  int l_max = 0;
  std::vector<HarmonicRow> rows;
  bool all_pass() const;
};

/// Set-1 energies at c1 = c2 = 0 against hbar omega (l + N/2) for every
/// partition n and every (p, l_n, l_Nn) with 2p + l_n + l_Nn = l <= l_max.
HarmonicReport harmonic_limit_check(int N, int l_max, const Rational& hbar = 1,
                                    const Rational& omega = 1);

}  // namespace singosc
