#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singosc/rational.hpp"

namespace singosc {

/// One singular-oscillator component: dimension m, coupling c, angular
/// number l (a parity label in {0, 1} when m == 1).
struct ComponentSpec {
  int m = 2;
  Rational c{0};
  int l = 0;
  Rational hbar{1};
  Rational omega{1};

  void validate() const;
  Rational c_reduced() const { return c / (hbar * hbar); }
  Rational omega_reduced() const { return omega / hbar; }
  /// Coefficient g of 1/(2 r^2) in the reduced radial equation:
  /// 2c' + l(l+m-2) + (m-1)(m-3)/4.
  Rational centrifugal() const;
  /// The even sector of a free 1D block, regular at 0 with nonzero value.
  bool even_free_line() const { return m == 1 && l == 0 && c.is_zero(); }
};

struct RadialMode {
  ComponentSpec spec;
  int Nr = 0;
  double delta = 0.0;
  double alpha = 0.0;
  double energy = 0.0;
  std::optional<Rational> alpha_exact;
  std::optional<Rational> energy_exact;
  std::string note;
};

/// Closed-form radial solution: alpha = sqrt((l+(m-2)/2)^2 + 2c'),
/// delta = (alpha - l - (m-2)/2)/2, E = 2 hbar omega (Nr + alpha/2 + 1/2).
RadialMode closed_form(const ComponentSpec& spec, int Nr);

/// 1F1(-Nr; b; z) by its terminating series.
double kummer(int Nr, double b, double z);

enum class WaveNorm {
  unit,       // unit norm in int |psi|^2 r^(m-1) dr
  raw_prefactor  // prefactor and power of u without the unit-norm fix, kept for comparison
};

/// Radial wavefunction at r > 0 with u = (omega/hbar) r^2.
double wavefunction(const RadialMode& mode, double r, WaveNorm norm = WaveNorm::unit);

struct NormCheck {
  double value = 0.0;
  double error_estimate = 0.0;
  double r_max = 0.0;
  int refinements = 0;
  bool converged = false;
};

/// Adaptive quadrature of |psi|^2 r^(m-1) over (0, r_max); r_max defaults
/// to 8/sqrt(omega'). Refines until successive estimates agree to `tol`.
NormCheck norm_integral(const RadialMode& mode, WaveNorm norm = WaveNorm::unit, double r_max = 0.0,
                        double tol = 1e-10);

/// Sign changes of the closed-form wavefunction on (0, r_max) by dense
/// sampling.
int wavefunction_sign_changes(const RadialMode& mode, double r_max = 0.0, int samples = 20000);

struct GridSpec {
  /// Node count of the coarsest level (0 picks one from the spectrum).
  int M = 0;
  /// Outer cutoff in r (0 picks one from the closed-form estimate).
  double r_max = 0.0;
  /// Grid levels, each doubling M; Richardson extrapolation uses all.
  int levels = 3;
};

struct FdResult {
  std::vector<double> energies;
  /// Raw eigenvalues per level (levels x count).
  std::vector<std::vector<double>> level_energies;
  std::vector<int> level_nodes;
  std::vector<double> level_h;
  /// |extrapolated - best single level|, per eigenvalue.
  std::vector<double> error_estimate;
  double r_min = 0.0;
  double r_max = 0.0;
  std::string boundary_at_zero;
};

/// Lowest `count` eigenvalues of the radial operator
///   -(hbar^2/2) chi'' + [omega^2 r^2/2 + hbar^2 g/(2 r^2)] chi = E chi
/// discretised with second-order differences in x = ln(r sqrt(omega')),
/// chi = e^(x/2) y, a Dirichlet condition at r_max and the regular
/// small-r behaviour imposed as a Robin condition at r_min.
FdResult fd_eigenvalues(const ComponentSpec& spec, const GridSpec& grid, int count);

struct FdModes {
  std::vector<double> r;
  std::vector<double> energies;
  /// chi_k on the r nodes.
  std::vector<std::vector<double>> chi;
  std::vector<int> sign_changes;
};

/// Eigenvectors of the coarsest level by inverse iteration.
FdModes fd_eigenvectors(const ComponentSpec& spec, const GridSpec& grid, int count);

/// Symmetric tridiagonal eigenvalue k (0-based, ascending) by Sturm
/// bisection.
double tridiagonal_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off, int k);
/// Eigenvector for a known eigenvalue by inverse iteration.
std::vector<double> tridiagonal_eigenvector(const std::vector<double>& diag,
                                            const std::vector<double>& off, double lambda);

struct TotalEnergy {
  int p = 0;
  double energy = 0.0;
  std::optional<Rational> energy_exact;
  /// E1 + E2 against 2 hbar omega (p + 1 + (alpha1 + alpha2)/2).
  bool forms_agree = false;
};

TotalEnergy total_energy(const RadialMode& mode1, const RadialMode& mode2);

}  // namespace singosc
