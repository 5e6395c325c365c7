#include "singosc/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace singosc {

void ComponentSpec::validate() const {
  if (m < 1) throw std::invalid_argument("component dimension m must be >= 1");
  if (l < 0) throw std::invalid_argument("angular number l must be >= 0");
  if (m == 1 && l > 1) throw std::invalid_argument("m = 1: l is a parity label in {0, 1}");
  if (c.sign() < 0) throw std::invalid_argument("coupling c must be >= 0");
  if (hbar.sign() <= 0 || omega.sign() <= 0) throw std::invalid_argument("hbar, omega must be > 0");
}

Rational ComponentSpec::centrifugal() const {
  const Rational ang = m == 1 ? Rational(0) : Rational(l) * Rational(l + m - 2);
  return Rational(2) * c_reduced() + ang + Rational((m - 1) * (m - 3), 4);
}

RadialMode closed_form(const ComponentSpec& spec, int Nr) {
  spec.validate();
  if (Nr < 0) throw std::invalid_argument("Nr must be >= 0");
  RadialMode mode;
  mode.spec = spec;
  mode.Nr = Nr;
  const Rational shift = Rational(spec.l) + Rational(spec.m - 2, 2);
  const Rational alpha_sq = shift * shift + Rational(2) * spec.c_reduced();
  const double sign = spec.even_free_line() ? -1.0 : 1.0;
  mode.alpha = sign * std::sqrt(alpha_sq.to_double());
  Rational root;
  if (alpha_sq.exact_sqrt(root)) {
    mode.alpha_exact = spec.even_free_line() ? -root : root;
    mode.energy_exact = Rational(2) * spec.hbar * spec.omega *
                        (Rational(Nr) + *mode.alpha_exact / Rational(2) + Rational(1, 2));
  }
  mode.delta = (mode.alpha - spec.l - (spec.m - 2) / 2.0) / 2.0;
  mode.energy = 2.0 * (spec.hbar * spec.omega).to_double() * (Nr + mode.alpha / 2.0 + 0.5);
  if (mode.energy_exact) mode.energy = mode.energy_exact->to_double();
  if (spec.m == 1) {
    mode.note = std::string("one-dimensional block on r=|x|, ") +
                (spec.l == 0 ? "even" : "odd") + " parity sector" +
                (spec.even_free_line() ? " (alpha=-1/2, regular with nonzero value at 0)" : "");
  }
  return mode;
}

double kummer(int Nr, double b, double z) {
  if (b <= 0) throw std::invalid_argument("kummer: b must be > 0");
  if (Nr < 0) throw std::invalid_argument("kummer: Nr must be >= 0");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < Nr; ++k) {
    term *= (k - Nr) * z / ((b + k) * (k + 1));
    sum += term;
  }
  return sum;
}

double wavefunction(const RadialMode& mode, double r, WaveNorm norm) {
  if (!(r > 0)) throw std::invalid_argument("wavefunction: r must be > 0");
  const double a = mode.spec.omega_reduced().to_double();
  const double u = a * r * r;
  const int N = mode.Nr;
  const double m = mode.spec.m;
  const double power = mode.delta + 0.5 * mode.spec.l;
  const double b = 2.0 * (power + m / 4.0);
  const double F = kummer(N, b, u);
  if (norm == WaveNorm::unit) {
    const double log_c2 = std::log(2.0) + 0.5 * m * std::log(a) + std::lgamma(N + b) -
                          std::lgamma(N + 1.0) - 2.0 * std::lgamma(b);
    return std::exp(0.5 * log_c2 + power * std::log(u) - 0.5 * u) * F;
  }
  const double pref = std::sqrt(2.0 * std::exp(std::lgamma(N + b) - std::lgamma(N + 1.0)) / b) * a;
  return pref * std::exp(0.5 * power * std::log(u) - 0.5 * u) * F;
}

NormCheck norm_integral(const RadialMode& mode, WaveNorm norm, double r_max, double tol) {
  const double a = mode.spec.omega_reduced().to_double();
  NormCheck out;
  out.r_max = r_max > 0 ? r_max : 8.0 / std::sqrt(a);
  const double m = mode.spec.m;
  auto f = [&](double r) {
    if (r <= 0) return 0.0;
    const double psi = wavefunction(mode, r, norm);
    return psi * psi * std::pow(r, m - 1);
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double prev = std::nan("");
  for (unsigned depth = 5; depth <= 30; depth += 5) {
    double err = 0;
    const double v = GK::integrate(f, 0.0, out.r_max, depth, tol, &err);
    ++out.refinements;
    out.value = v;
    out.error_estimate = err;
    if (!std::isnan(prev) && std::abs(v - prev) <= tol * std::max(1.0, std::abs(v)) && err <= tol * std::max(1.0, std::abs(v))) {
      out.converged = true;
      break;
    }
    prev = v;
  }
  return out;
}

namespace {

int count_sign_changes(const std::vector<double>& v) {
  double peak = 0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  int changes = 0;
  int last = 0;
  for (double x : v) {
    if (std::abs(x) < 1e-8 * peak) continue;
    const int s = x > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int wavefunction_sign_changes(const RadialMode& mode, double r_max, int samples) {
  const double a = mode.spec.omega_reduced().to_double();
  if (r_max <= 0) r_max = 8.0 / std::sqrt(a);
  std::vector<double> v;
  v.reserve(samples);
  for (int i = 1; i <= samples; ++i) v.push_back(wavefunction(mode, r_max * i / samples));
  return count_sign_changes(v);
}

// ---------------------------------------------------------------------------
// Tridiagonal pencils  (A - lambda W) with W diagonal positive.

namespace {

struct Pencil {
  std::vector<double> diag;
  std::vector<double> off;
  std::vector<double> weight;
};

/// Eigenvalues of the pencil below lambda, by Sylvester inertia of the
/// LDL^T factorisation of A - lambda W.
int count_below(const Pencil& p, double lambda) {
  int count = 0;
  double d = 1.0;
  const std::size_t n = p.diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = i == 0 ? 0.0 : p.off[i - 1] * p.off[i - 1];
    d = p.diag[i] - lambda * p.weight[i] - (i == 0 ? 0.0 : e2 / d);
    if (d == 0.0) d = -1e-300;
    if (d < 0) ++count;
  }
  return count;
}

double pencil_eigenvalue(const Pencil& p, int k) {
  double lo = -1.0;
  while (count_below(p, lo) > k) lo *= 2.0;
  double hi = 1.0;
  while (count_below(p, hi) <= k) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 4e-16 * std::max(std::abs(lo), std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(p, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Solves (A - sigma W) x = rhs by Gaussian elimination with partial
/// pivoting on the tridiagonal band.
std::vector<double> solve_shifted(const Pencil& p, double sigma, const std::vector<double>& rhs) {
  const std::size_t n = p.diag.size();
  // Band storage: up to two superdiagonals after pivoting.
  std::vector<double> a(n), b(n), c(n), d(n, 0.0), x = rhs;
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = p.diag[i] - sigma * p.weight[i];
    a[i] = i > 0 ? p.off[i - 1] : 0.0;
    c[i] = i + 1 < n ? p.off[i] : 0.0;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // rows i and i+1; a[i+1] is the subdiagonal entry of row i+1
    if (std::abs(a[i + 1]) > std::abs(b[i])) {
      std::swap(b[i], a[i + 1]);
      std::swap(c[i], b[i + 1]);
      std::swap(d[i], c[i + 1]);
      std::swap(x[i], x[i + 1]);
    }
    if (b[i] == 0.0) b[i] = 1e-300;
    const double f = a[i + 1] / b[i];
    b[i + 1] -= f * c[i];
    c[i + 1] -= f * d[i];
    x[i + 1] -= f * x[i];
  }
  if (b[n - 1] == 0.0) b[n - 1] = 1e-300;
  for (std::size_t k = n; k-- > 0;) {
    double s = x[k];
    if (k + 1 < n) s -= c[k] * x[k + 1];
    if (k + 2 < n) s -= d[k] * x[k + 2];
    x[k] = s / b[k];
  }
  return x;
}

std::vector<double> pencil_eigenvector(const Pencil& p, double lambda) {
  const std::size_t n = p.diag.size();
  const double sigma = lambda + 1e-10 * std::max(1.0, std::abs(lambda));
  std::vector<double> v(n, 1.0);
  for (int it = 0; it < 4; ++it) {
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = p.weight[i] * v[i];
    v = solve_shifted(p, sigma, rhs);
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += p.weight[i] * v[i] * v[i];
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

struct Discretisation {
  Pencil pencil;
  std::vector<double> x;
  double h = 0;
};

/// -y'' + (alpha^2 + e^{4x}) y = lambda e^{2x} y on [x_min, x_max), with
/// y(x_max) = 0 and y' = alpha y at x_min (half-cell row).
Discretisation discretise(double g, double alpha_ind, double x_min, double x_max, int M) {
  Discretisation out;
  const double h = (x_max - x_min) / M;
  out.h = h;
  const double a2 = g + 0.25;
  auto& P = out.pencil;
  P.diag.resize(M);
  P.off.resize(M - 1);
  P.weight.resize(M);
  out.x.resize(M);
  const double ih2 = 1.0 / (h * h);
  for (int i = 0; i < M; ++i) {
    const double x = x_min + i * h;
    out.x[i] = x;
    const double q = a2 + std::exp(4 * x);
    P.diag[i] = 2 * ih2 + q;
    P.weight[i] = std::exp(2 * x);
    if (i + 1 < M) P.off[i] = -ih2;
  }
  P.diag[0] = (1.0 + h * alpha_ind) * ih2 + 0.5 * (a2 + std::exp(4 * x_min));
  P.weight[0] *= 0.5;
  return out;
}

/// -chi'' + rho^2 chi = lambda chi on [0, rho_max) with chi'(0) = 0
/// (half-cell row) and chi(rho_max) = 0. Used for the even sector of a free
/// 1D block, where g = 0 and the log grid would follow the wrong branch.
Discretisation discretise_even_line(double rho_max, int M) {
  Discretisation out;
  const double h = rho_max / M;
  out.h = h;
  auto& P = out.pencil;
  P.diag.resize(M);
  P.off.resize(M - 1);
  P.weight.assign(M, 1.0);
  out.x.resize(M);
  const double ih2 = 1.0 / (h * h);
  for (int i = 0; i < M; ++i) {
    const double rho = i * h;
    out.x[i] = rho;
    P.diag[i] = 2 * ih2 + rho * rho;
    if (i + 1 < M) P.off[i] = -ih2;
  }
  P.diag[0] = ih2;
  P.weight[0] = 0.5;
  return out;
}

struct Layout {
  double g = 0;
  double alpha_ind = 0;
  double x_min = 0;
  double x_max = 0;
  int M = 0;
  double eps_est = 0;
  /// Uniform grid in rho = r sqrt(omega') instead of x = ln rho.
  bool uniform = false;
  double rho_max = 0;
};

Discretisation discretise(const Layout& L, int M) {
  if (L.uniform) return discretise_even_line(L.rho_max, M);
  return discretise(L.g, L.alpha_ind, L.x_min, L.x_max, M);
}

/// Node positions in r for a discretisation built from L.
double node_r(const Layout& L, double node, double sqrt_w) {
  return (L.uniform ? node : std::exp(node)) / sqrt_w;
}

Layout layout(const ComponentSpec& spec, const GridSpec& grid, int count) {
  spec.validate();
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (grid.levels < 1) throw std::invalid_argument("grid levels must be >= 1");
  Layout L;
  L.g = spec.centrifugal().to_double();
  // Indicial exponent of the reduced equation at the origin.
  L.alpha_ind = std::sqrt(std::max(0.0, L.g + 0.25));
  if (spec.even_free_line()) L.alpha_ind = -L.alpha_ind;
  const RadialMode top = closed_form(spec, count - 1);
  L.eps_est = top.energy / (spec.hbar * spec.omega).to_double();
  const double sqrt_w = std::sqrt(spec.omega_reduced().to_double());
  const double turning = std::sqrt(2 * L.eps_est);
  double rho_max = turning + 7.0;
  if (grid.r_max > 0) {
    rho_max = grid.r_max * sqrt_w;
    if (rho_max <= turning) throw std::invalid_argument("r_max below the classical turning point");
  }
  L.rho_max = rho_max;
  L.uniform = spec.even_free_line();
  L.x_max = std::log(rho_max);
  // Truncation below x_min costs about exp((2 + 2 alpha) x_min).
  L.x_min = L.uniform ? 0.0 : std::min(-6.0, -28.0 / (2.0 + 2.0 * L.alpha_ind));
  const double span = L.uniform ? rho_max : L.x_max - L.x_min;
  // Largest local wavenumber: eps in x = ln rho, sqrt(2 eps) in rho.
  const double k_max = L.uniform ? std::sqrt(2 * L.eps_est) : std::max(1.0, L.eps_est);
  const int auto_M = static_cast<int>(std::ceil(span * k_max / 0.25));
  L.M = grid.M > 0 ? grid.M : std::max(512, auto_M);
  if (L.M < 64) throw std::invalid_argument("grid too coarse: M must be >= 64");
  if (span / L.M * k_max > 1.0) {
    throw std::invalid_argument("grid too coarse to resolve the requested levels");
  }
  return L;
}

}  // namespace

double tridiagonal_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off, int k) {
  Pencil p{diag, off, std::vector<double>(diag.size(), 1.0)};
  return pencil_eigenvalue(p, k);
}

std::vector<double> tridiagonal_eigenvector(const std::vector<double>& diag, const std::vector<double>& off,
                                            double lambda) {
  Pencil p{diag, off, std::vector<double>(diag.size(), 1.0)};
  return pencil_eigenvector(p, lambda);
}

FdResult fd_eigenvalues(const ComponentSpec& spec, const GridSpec& grid, int count) {
  const Layout L = layout(spec, grid, count);
  const double hw = (spec.hbar * spec.omega).to_double();
  const double sqrt_w = std::sqrt(spec.omega_reduced().to_double());
  FdResult out;
  out.r_min = L.uniform ? 0.0 : std::exp(L.x_min) / sqrt_w;
  out.r_max = L.rho_max / sqrt_w;
  out.boundary_at_zero = spec.even_free_line() ? "regular, nonzero value (Neumann-type)" : "regular, vanishing (Dirichlet-type)";
  for (int level = 0; level < grid.levels; ++level) {
    const int M = L.M << level;
    const Discretisation d = discretise(L, M);
    std::vector<double> e(count);
    for (int k = 0; k < count; ++k) e[k] = 0.5 * pencil_eigenvalue(d.pencil, k) * hw;
    out.level_energies.push_back(e);
    out.level_nodes.push_back(M);
    out.level_h.push_back(d.h);
  }
  // Richardson table in h^2.
  out.energies.resize(count);
  out.error_estimate.resize(count);
  for (int k = 0; k < count; ++k) {
    std::vector<double> t;
    for (const auto& lv : out.level_energies) t.push_back(lv[k]);
    double factor = 4.0;
    for (std::size_t col = 1; col < t.size(); ++col) {
      for (std::size_t i = t.size() - 1; i >= col; --i) t[i] = (factor * t[i] - t[i - 1]) / (factor - 1.0);
      factor *= 4.0;
    }
    out.energies[k] = t.back();
    out.error_estimate[k] = std::abs(t.back() - out.level_energies.back()[k]);
  }
  return out;
}

FdModes fd_eigenvectors(const ComponentSpec& spec, const GridSpec& grid, int count) {
  const Layout L = layout(spec, grid, count);
  const double hw = (spec.hbar * spec.omega).to_double();
  const double sqrt_w = std::sqrt(spec.omega_reduced().to_double());
  const Discretisation d = discretise(L, L.M);
  FdModes out;
  for (double x : d.x) out.r.push_back(node_r(L, x, sqrt_w));
  for (int k = 0; k < count; ++k) {
    const double lambda = pencil_eigenvalue(d.pencil, k);
    std::vector<double> y = pencil_eigenvector(d.pencil, lambda);
    if (!L.uniform) {
      for (std::size_t i = 0; i < y.size(); ++i) y[i] *= std::exp(0.5 * d.x[i]);
    }
    out.energies.push_back(0.5 * lambda * hw);
    out.sign_changes.push_back(count_sign_changes(y));
    out.chi.push_back(std::move(y));
  }
  return out;
}

TotalEnergy total_energy(const RadialMode& m1, const RadialMode& m2) {
  if (m1.spec.hbar != m2.spec.hbar || m1.spec.omega != m2.spec.omega) {
    throw std::invalid_argument("total_energy: modes must share hbar and omega");
  }
  TotalEnergy t;
  t.p = m1.Nr + m2.Nr;
  const Rational hw = m1.spec.hbar * m1.spec.omega;
  const double p_form = 2.0 * hw.to_double() * (t.p + 1 + (m1.alpha + m2.alpha) / 2.0);
  t.energy = m1.energy + m2.energy;
  if (m1.energy_exact && m2.energy_exact) {
    t.energy_exact = *m1.energy_exact + *m2.energy_exact;
    const Rational exact_p = Rational(2) * hw *
                             (Rational(t.p + 1) + (*m1.alpha_exact + *m2.alpha_exact) / Rational(2));
    t.forms_agree = exact_p == *t.energy_exact;
    t.energy = t.energy_exact->to_double();
  } else {
    t.forms_agree = std::abs(p_form - t.energy) <= 1e-12 * std::max(1.0, std::abs(t.energy));
  }
  return t;
}

}  // namespace singosc
