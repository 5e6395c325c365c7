#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "singosc/rational.hpp"

namespace singosc {

/// Dimension of the degree-l harmonic polynomials in m variables; for m = 1
/// the parity sectors l = 0, 1 each count once.
std::int64_t dim_harm(int m, int l);

std::int64_t binomial(int n, int k);

struct LevelContributor {
  int N1 = 0;
  int N2 = 0;
  int l_n = 0;
  int l_Nn = 0;
};

struct Level {
  double E = 0.0;
  std::optional<Rational> E_exact;
  std::vector<LevelContributor> contributors;
  std::int64_t degeneracy = 0;
  /// More than one (p, l_n, l_Nn) sector merged into this level.
  bool accidental = false;
};

struct LevelTable {
  int N = 0;
  int n = 0;
  Rational c1{0};
  Rational c2{0};
  Rational hbar{1};
  Rational omega{1};
  Rational E_cut{0};
  std::vector<Level> levels;
};

/// Every (N1, N2, l_n, l_Nn) with E <= E_cut, grouped into levels
/// (relative merge tolerance 1e-9, exact comparison when both energies are
/// rational) and sorted by energy.
LevelTable enumerate_levels(int N, int n, const Rational& c1, const Rational& c2, const Rational& E_cut,
                            const Rational& hbar = 1, const Rational& omega = 1);

struct CountRow {
  int n = 0;
  int l = 0;
  std::int64_t count = 0;
  std::int64_t expected = 0;
  bool pass = false;
};

struct CountReport {
  int N = 0;
  int l_max = 0;
  std::vector<CountRow> rows;
  bool all_pass() const;
};

/// At c1 = c2 = 0: sum over 2p + l_n + l_Nn = l of (p+1) dim dim against
/// C(l+N-1, N-1), for every partition n.
CountReport oscillator_count_check(int N, int l_max);

}  // namespace singosc
