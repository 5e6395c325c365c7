#include "singosc/qalg.hpp"

#include <sstream>
#include <stdexcept>

namespace singosc {

Real to_real(const Rational& r) {
  const mpq_class q = r.to_mpq();
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

// ---------------------------------------------------------------------------
// Central eigenvalues and m

Rational angular_eigenvalue(int m, int l) {
  if (m == 1) return 0;
  return Rational(l) * Rational(l + m - 2);
}

CentralEigs CentralEigs::make(int N, int n, int l_n, int l_Nn, Rational hbar, Rational omega,
                              Rational c1, Rational c2) {
  if (N < 2 || n < 1 || n > N - 1) throw std::invalid_argument("invalid (N, n)");
  if (l_n < 0 || l_Nn < 0) throw std::invalid_argument("angular numbers must be non-negative");
  if ((n == 1 && l_n > 1) || (N - n == 1 && l_Nn > 1)) {
    throw std::invalid_argument("one-dimensional block: l is a parity label in {0, 1}");
  }
  if (hbar.sign() <= 0 || omega.sign() <= 0) throw std::invalid_argument("hbar, omega must be positive");
  if (c1.sign() < 0 || c2.sign() < 0) throw std::invalid_argument("couplings must be non-negative");
  CentralEigs ce;
  ce.N = N;
  ce.n = n;
  ce.l_n = l_n;
  ce.l_Nn = l_Nn;
  ce.hbar = hbar;
  ce.omega = omega;
  ce.c1 = c1;
  ce.c2 = c2;
  ce.j2 = hbar * hbar * angular_eigenvalue(n, l_n);
  ce.k2 = hbar * hbar * angular_eigenvalue(N - n, l_Nn);
  return ce;
}

MQuantum m_values(const CentralEigs& ce) {
  const Rational h2 = ce.hbar * ce.hbar;
  MQuantum m;
  m.m1_sq = (Rational(8) * ce.c1 + Rational(4) * ce.j2) / h2 + Rational((ce.n - 2) * (ce.n - 2));
  m.m2_sq = (Rational(8) * ce.c2 + Rational(4) * ce.k2) / h2 +
            Rational((ce.N - ce.n - 2) * (ce.N - ce.n - 2));
  if (m.m1_sq.sign() < 0 || m.m2_sq.sign() < 0) throw std::domain_error("negative radicand for m");
  Rational r;
  if (m.m1_sq.exact_sqrt(r)) m.m1_exact = r;
  if (m.m2_sq.exact_sqrt(r)) m.m2_exact = r;
  m.m1 = m.m1_exact ? to_real(*m.m1_exact) : boost::multiprecision::sqrt(to_real(m.m1_sq));
  m.m2 = m.m2_exact ? to_real(*m.m2_exact) : boost::multiprecision::sqrt(to_real(m.m2_sq));
  return m;
}

// ---------------------------------------------------------------------------
// Surd

std::shared_ptr<const Surd::Field> Surd::make_field(const Rational& M1, const Rational& M2) {
  auto f = std::make_shared<Field>();
  f->M1 = M1;
  f->M2 = M2;
  Rational r;
  if (M1.exact_sqrt(r)) f->r1 = r;
  if (M2.exact_sqrt(r)) f->r2 = r;
  if (!f->r1 && !f->r2 && (M1 * M2).exact_sqrt(r)) f->k = r / M1;
  return f;
}

Surd Surd::m1(const std::shared_ptr<const Field>& f) {
  Surd s;
  s.f_ = f;
  s.b_ = 1;
  s.normalize();
  return s;
}

Surd Surd::m2(const std::shared_ptr<const Field>& f) {
  Surd s;
  s.f_ = f;
  s.c_ = 1;
  s.normalize();
  return s;
}

void Surd::normalize() {
  if (!f_) return;
  if (f_->r1) {
    a_ += b_ * *f_->r1;
    c_ += d_ * *f_->r1;
    b_ = 0;
    d_ = 0;
  }
  if (f_->r2) {
    a_ += c_ * *f_->r2;
    b_ += d_ * *f_->r2;
    c_ = 0;
    d_ = 0;
  }
  if (f_->k) {
    b_ += c_ * *f_->k;
    a_ += d_ * *f_->k * f_->M1;
    c_ = 0;
    d_ = 0;
  }
}

Surd Surd::operator-() const {
  Surd s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  s.c_ = -s.c_;
  s.d_ = -s.d_;
  return s;
}

Surd& Surd::operator+=(const Surd& o) {
  if (!f_) f_ = o.f_;
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Surd& o) {
  if (!f_) f_ = o.f_;
  if (!f_) {
    a_ *= o.a_;
    return *this;
  }
  const Rational& M1 = f_->M1;
  const Rational& M2 = f_->M2;
  Surd r;
  r.f_ = f_;
  r.a_ = a_ * o.a_ + b_ * o.b_ * M1 + c_ * o.c_ * M2 + d_ * o.d_ * M1 * M2;
  r.b_ = a_ * o.b_ + b_ * o.a_ + (c_ * o.d_ + d_ * o.c_) * M2;
  r.c_ = a_ * o.c_ + c_ * o.a_ + (b_ * o.d_ + d_ * o.b_) * M1;
  r.d_ = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  r.normalize();
  return *this = r;
}

Real Surd::to_real() const {
  Real v = singosc::to_real(a_);
  if (!f_) return v;
  const Real s1 = boost::multiprecision::sqrt(singosc::to_real(f_->M1));
  const Real s2 = boost::multiprecision::sqrt(singosc::to_real(f_->M2));
  return v + singosc::to_real(b_) * s1 + singosc::to_real(c_) * s2 + singosc::to_real(d_) * s1 * s2;
}

std::string Surd::to_string() const {
  std::ostringstream os;
  os << a_.to_string();
  if (!b_.is_zero()) os << " + (" << b_.to_string() << ")*m1";
  if (!c_.is_zero()) os << " + (" << c_.to_string() << ")*m2";
  if (!d_.is_zero()) os << " + (" << d_.to_string() << ")*m1*m2";
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomials in x

namespace {

template <class T>
T lift(const Rational& r);
template <>
Rational lift<Rational>(const Rational& r) { return r; }
template <>
Real lift<Real>(const Rational& r) { return to_real(r); }
template <>
Surd lift<Surd>(const Rational& r) { return Surd(r); }

template <class T>
using Poly = std::vector<T>;

template <class T>
Poly<T> padd(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> out(std::max(a.size(), b.size()), lift<T>(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  return out;
}

template <class T>
Poly<T> pmul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> out(a.size() + b.size() - 1, lift<T>(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

template <class T>
Poly<T> pscale(Poly<T> a, const T& s) {
  for (auto& c : a) c = c * s;
  return a;
}

template <class T>
Poly<T> pconst(const T& c) {
  return Poly<T>{c};
}

}  // namespace

template <class T>
T poly_eval(const std::vector<T>& coeffs, const T& x) {
  T acc = lift<T>(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational factored_leading(const CentralEigs& ce) {
  return Rational(-12582912) * pow(ce.hbar, 18) * ce.omega * ce.omega;
}

template <class T>
std::array<T, 6> factored_roots(const CentralEigs& ce, const T& m1, const T& m2, const T& E,
                                const FactoredOptions& opt) {
  const T q = lift<T>(Rational(1, 4));
  const T two = lift<T>(2);
  const T hw = lift<T>(ce.hbar * ce.omega);
  // Division by 2 hbar omega as multiplication by its exact inverse.
  const T inv_hw2 = lift<T>(Rational(1) / (Rational(2) * ce.hbar * ce.omega));
  std::array<T, 6> r = {
      q * (two + m1 + m2), q * (two - m1 + m2), q * (two + m1 - m2), q * (two - m1 - m2),
      (hw - E) * inv_hw2,  (E + hw) * inv_hw2,
  };
  for (int i = 0; i < 6; ++i) r[i] = r[i] + lift<T>(opt.root_shift[i]);
  return r;
}

template <class T>
std::vector<T> structure_poly_raw(const CentralEigs& ce, const T& u, const T& E) {
  const Rational h = ce.hbar;
  const Rational h2 = h * h;
  const Rational h4 = h2 * h2;
  const Rational& J = ce.j2;
  const Rational& K = ce.k2;
  const Rational& c1 = ce.c1;
  const Rational& c2 = ce.c2;
  const Rational N(ce.N);
  const Rational n(ce.n);
  auto R = [](const Rational& r) { return lift<T>(r); };

  // Parameter-only part of the bracket.
  const Rational t0 =
      Rational(64) * c1 * c1 + Rational(64) * c2 * c2 - Rational(48) * h4 - Rational(32) * h2 * J +
      Rational(16) * J * J - Rational(32) * h2 * K - Rational(32) * J * K + Rational(16) * K * K -
      Rational(64) * h2 * J * n + Rational(64) * h2 * K * n + Rational(48) * h4 * n * n +
      Rational(32) * h4 * N + Rational(32) * h2 * J * N - Rational(32) * h2 * K * N -
      Rational(48) * h4 * n * N + Rational(16) * h2 * J * n * N - Rational(16) * h2 * K * n * N -
      Rational(32) * h4 * n * n * N + Rational(8) * h4 * N * N - Rational(8) * h2 * J * N * N +
      Rational(8) * h2 * K * N * N + Rational(32) * h4 * n * N * N + Rational(4) * h4 * n * n * N * N -
      Rational(8) * h4 * N * N * N - Rational(4) * h4 * n * N * N * N + h4 * N * N * N * N;

  const Poly<T> y = {u, R(1)};
  const Poly<T> y2 = pmul(y, y);
  const Poly<T> y3 = pmul(y2, y);
  const Poly<T> y4 = pmul(y3, y);
  // (1 - 2y)^2
  const Poly<T> w = pmul(padd(pconst(R(1)), pscale(y, R(-2))), padd(pconst(R(1)), pscale(y, R(-2))));

  Poly<T> bracket = pconst(R(t0));
  // -16 c2 [4(J-K) + h^2((N-4)(2n-N) + 4(1-2y)^2)]
  bracket = padd(bracket, pconst(R(Rational(-16) * c2 *
                                   (Rational(4) * (J - K) + h2 * (N - Rational(4)) * (Rational(2) * n - N)))));
  bracket = padd(bracket, pscale(w, R(Rational(-64) * c2 * h2)));
  // -16 c1 [8 c2 - 4J + 4K + h^2((N-4)(N-2n) + 4(1-2y)^2)]
  bracket = padd(bracket, pconst(R(Rational(-16) * c1 *
                                   (Rational(8) * c2 - Rational(4) * J + Rational(4) * K +
                                    h2 * (N - Rational(4)) * (N - Rational(2) * n)))));
  bracket = padd(bracket, pscale(w, R(Rational(-64) * c1 * h2)));
  // +32 h^2 [4(J+K) + h^2(2n^2 + (N-2)^2 - 2nN)] y
  bracket = padd(bracket, pscale(y, R(Rational(32) * h2 *
                                      (Rational(4) * (J + K) +
                                       h2 * (Rational(2) * n * n + (N - Rational(2)) * (N - Rational(2)) -
                                             Rational(2) * n * N)))));
  // -32 h^2 [4(J+K) + h^2(2(n^2-2) - 2(n+2)N + N^2)] y^2
  bracket = padd(bracket, pscale(y2, R(Rational(-32) * h2 *
                                       (Rational(4) * (J + K) +
                                        h2 * (Rational(2) * (n * n - Rational(2)) -
                                              Rational(2) * (n + Rational(2)) * N + N * N)))));
  bracket = padd(bracket, pscale(y3, R(Rational(-512) * h4)));
  bracket = padd(bracket, pscale(y4, R(Rational(256) * h4)));

  // [E^2 - hbar^2 (1-2y)^2 omega^2]
  const Poly<T> last = padd(pconst(E * E), pscale(w, R(-h2 * ce.omega * ce.omega)));
  return pscale(pmul(bracket, last), R(Rational(12288) * pow(h, 12)));
}

template <class T>
std::vector<T> structure_poly_factored(const CentralEigs& ce, const T& m1, const T& m2, const T& u,
                                       const T& E, const FactoredOptions& opt) {
  const auto roots = factored_roots(ce, m1, m2, E, opt);
  Poly<T> out = pconst(lift<T>(factored_leading(ce)));
  for (int i = 0; i < 6; ++i) {
    const bool plain_x = i == 5 && opt.reading == LastFactor::bare_x;
    // (x + u - root) or (x - root)
    const T shift = plain_x ? T(lift<T>(0)) - roots[i] : u - roots[i];
    out = pmul(out, Poly<T>{shift, lift<T>(1)});
  }
  return out;
}

bool structure_forms_agree(const CentralEigs& ce, const Rational& u, const Rational& E,
                           const FactoredOptions& opt) {
  const MQuantum mq = m_values(ce);
  const auto field = Surd::make_field(mq.m1_sq, mq.m2_sq);
  const auto raw = structure_poly_raw<Rational>(ce, u, E);
  const auto fac = structure_poly_factored<Surd>(ce, Surd::m1(field), Surd::m2(field), Surd(u), Surd(E), opt);
  if (raw.size() != fac.size()) return false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!fac[i].is_rational() || fac[i].rational_part() != raw[i]) return false;
  }
  return true;
}

#define SINGOSC_INSTANTIATE(T)                                                                       \
  template T poly_eval<T>(const std::vector<T>&, const T&);                                         \
  template std::array<T, 6> factored_roots<T>(const CentralEigs&, const T&, const T&, const T&,      \
                                              const FactoredOptions&);                              \
  template std::vector<T> structure_poly_raw<T>(const CentralEigs&, const T&, const T&);            \
  template std::vector<T> structure_poly_factored<T>(const CentralEigs&, const T&, const T&,        \
                                                     const T&, const T&, const FactoredOptions&);
SINGOSC_INSTANTIATE(Rational)
SINGOSC_INSTANTIATE(Real)
SINGOSC_INSTANTIATE(Surd)
#undef SINGOSC_INSTANTIATE

// ---------------------------------------------------------------------------
// Unirreps

namespace {

bool near_zero(const Rational& v, const Rational&) { return v.is_zero(); }
bool near_zero(const Real& v, const Real& scale) { return abs(v) <= kRealZeroTol * (1 + scale); }

Real as_real(const Rational& r) { return to_real(r); }
Real as_real(const Real& r) { return r; }

template <class T>
int sign_of(const T& v) {
  if (v > T(0)) return 1;
  if (v < T(0)) return -1;
  return 0;
}
int sign_of(const Rational& v) { return v.sign(); }

template <class T>
UnirrepSolution solve_typed(int set_id, int eps1, int eps2, int p, const CentralEigs& ce, const T& m1,
                            const T& m2, const FactoredOptions& opt) {
  const T hw = lift<T>(ce.hbar * ce.omega);
  const T inv_hw2 = lift<T>(Rational(1) / (Rational(2) * ce.hbar * ce.omega));
  const T em = lift<T>(eps1) * m1 + lift<T>(eps2) * m2;
  const T E = lift<T>(Rational(2) * ce.hbar * ce.omega) * (lift<T>(p + 1) + lift<T>(Rational(1, 4)) * em);
  T u;
  switch (set_id) {
    case 1: u = (hw - E) * inv_hw2; break;
    case 2: u = (E + hw) * inv_hw2; break;
    case 3: u = lift<T>(Rational(1, 4)) * (lift<T>(2) + em); break;
    default: throw std::invalid_argument("set_id must be 1, 2 or 3");
  }
  UnirrepSolution s;
  s.set_id = set_id;
  s.eps1 = eps1;
  s.eps2 = eps2;
  s.p = p;
  s.u = as_real(u);
  s.E = as_real(E);
  if constexpr (std::is_same_v<T, Rational>) {
    s.u_exact = u;
    s.E_exact = E;
  }
  const auto roots = factored_roots(ce, m1, m2, E, opt);
  const Rational lead = factored_leading(ce);
  // Phi evaluated factor by factor so zero tests are per factor.
  auto phi_at = [&](int x, bool& zero) {
    const T xt = lift<T>(x);
    T value = lift<T>(lead);
    zero = false;
    for (int i = 0; i < 6; ++i) {
      const bool plain_x = i == 5 && opt.reading == LastFactor::bare_x;
      const T y = plain_x ? xt : xt + u;
      const T f = y - roots[i];
      T scale_t = y * y + roots[i] * roots[i];
      if (near_zero(f, scale_t)) zero = true;
      value = value * f;
    }
    if (zero) value = lift<T>(0);
    return value;
  };
  bool zero0 = false;
  bool zero_end = false;
  s.phi.resize(p + 2);
  s.phi[0] = as_real(phi_at(0, zero0));
  s.phi[p + 1] = as_real(phi_at(p + 1, zero_end));
  s.boundary_ok = zero0 && zero_end;
  s.positive = true;
  for (int x = 1; x <= p; ++x) {
    bool zero = false;
    const T v = phi_at(x, zero);
    s.phi[x] = as_real(v);
    if (s.positive && (zero || sign_of(v) <= 0)) {
      s.positive = false;
      s.failing_x = x;
    }
  }
  s.energy_positive = sign_of(E) > 0;
  s.admissible = s.boundary_ok && s.positive && s.energy_positive;
  std::vector<std::string> why;
  if (!zero0) why.push_back("Phi(0) != 0");
  if (!zero_end) why.push_back("Phi(p+1) != 0");
  if (!s.positive) why.push_back("sign-inadmissible: Phi <= 0 at x=" + std::to_string(*s.failing_x));
  if (!s.energy_positive) why.push_back("E <= 0");
  for (std::size_t i = 0; i < why.size(); ++i) s.note += (i ? "; " : "") + why[i];
  return s;
}

}  // namespace

UnirrepSolution solve_unirrep(int set_id, int eps1, int eps2, int p, const CentralEigs& ce,
                              const FactoredOptions& opt) {
  if (p < 0) throw std::invalid_argument("p must be non-negative");
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1)) throw std::invalid_argument("eps must be +-1");
  const MQuantum mq = m_values(ce);
  if (mq.exact()) return solve_typed<Rational>(set_id, eps1, eps2, p, ce, *mq.m1_exact, *mq.m2_exact, opt);
  return solve_typed<Real>(set_id, eps1, eps2, p, ce, mq.m1, mq.m2, opt);
}

std::vector<UnirrepSolution> solve_unirreps(int p, const CentralEigs& ce, const FactoredOptions& opt) {
  std::vector<UnirrepSolution> out;
  for (int set_id = 1; set_id <= 3; ++set_id) {
    for (auto [e1, e2] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, 1}, std::pair{-1, -1}}) {
      out.push_back(solve_unirrep(set_id, e1, e2, p, ce, opt));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Harmonic limit

int harmonic_sign(int m, int l) { return 2 * l + m - 2 < 0 ? -1 : 1; }

bool HarmonicReport::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

HarmonicReport harmonic_limit_check(int N, int l_max, const Rational& hbar, const Rational& omega) {
  HarmonicReport rep;
  rep.N = N;
  rep.l_max = l_max;
  for (int n = 1; n <= N - 1; ++n) {
    const int lmax_n = n == 1 ? 1 : l_max;
    const int lmax_Nn = N - n == 1 ? 1 : l_max;
    for (int l = 0; l <= l_max; ++l) {
      for (int p = 0; 2 * p <= l; ++p) {
        for (int ln = 0; ln <= std::min(lmax_n, l - 2 * p); ++ln) {
          const int lNn = l - 2 * p - ln;
          if (lNn > lmax_Nn) continue;
          const CentralEigs ce = CentralEigs::make(N, n, ln, lNn, hbar, omega);
          const UnirrepSolution s =
              solve_unirrep(1, harmonic_sign(n, ln), harmonic_sign(N - n, lNn), p, ce);
          HarmonicRow row;
          row.n = n;
          row.p = p;
          row.l_n = ln;
          row.l_Nn = lNn;
          row.l = l;
          row.E = s.E_exact.value_or(Rational(0));
          row.expected = hbar * omega * (Rational(l) + Rational(N, 2));
          row.pass = s.E_exact.has_value() && row.E == row.expected;
          rep.rows.push_back(row);
        }
      }
    }
  }
  return rep;
}

}  // namespace singosc
