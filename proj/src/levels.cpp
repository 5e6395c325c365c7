#include "singosc/levels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "singosc/radial.hpp"

namespace singosc {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t dim_harm(int m, int l) {
  if (m < 1) throw std::invalid_argument("dim_harm: m must be >= 1");
  if (l < 0) return 0;
  if (m == 1) return l <= 1 ? 1 : 0;
  if (m == 2) return l == 0 ? 1 : 2;
  // (2l+m-2) (l+m-3)! / (l! (m-2)!)
  return (2 * l + m - 2) * binomial(l + m - 3, l) / (m - 2);
}

namespace {

struct Entry {
  double E;
  std::optional<Rational> exact;
  LevelContributor who;
  int p;
  std::int64_t dim;
};

bool same_level(const Entry& a, const Entry& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  return std::abs(a.E - b.E) <= 1e-9 * std::max(std::abs(a.E), std::abs(b.E));
}

int max_l(int m) { return m == 1 ? 1 : 1 << 20; }

}  // namespace

LevelTable enumerate_levels(int N, int n, const Rational& c1, const Rational& c2, const Rational& E_cut,
                            const Rational& hbar, const Rational& omega) {
  if (N < 2 || n < 1 || n > N - 1) throw std::invalid_argument("invalid (N, n)");
  LevelTable table;
  table.N = N;
  table.n = n;
  table.c1 = c1;
  table.c2 = c2;
  table.hbar = hbar;
  table.omega = omega;
  table.E_cut = E_cut;
  const double cut = E_cut.to_double();
  auto spec = [&](int m, const Rational& c, int l) {
    ComponentSpec s;
    s.m = m;
    s.c = c;
    s.l = l;
    s.hbar = hbar;
    s.omega = omega;
    return s;
  };
  auto within = [&](const RadialMode& a, const RadialMode& b) {
    if (a.energy_exact && b.energy_exact) return *a.energy_exact + *b.energy_exact <= E_cut;
    return a.energy + b.energy <= cut * (1 + 1e-12);
  };
  const RadialMode ground1 = closed_form(spec(n, c1, 0), 0);
  const RadialMode ground2 = closed_form(spec(N - n, c2, 0), 0);
  if (!within(ground1, ground2)) throw std::invalid_argument("E_cut below the ground energy");

  std::vector<Entry> entries;
  // energies are nondecreasing in l, N1 and N2, so each loop stops at the
  // first term above the cut
  for (int ln = 0; ln <= max_l(n); ++ln) {
    if (!within(closed_form(spec(n, c1, ln), 0), ground2)) break;
    for (int lNn = 0; lNn <= max_l(N - n); ++lNn) {
      const RadialMode b0 = closed_form(spec(N - n, c2, lNn), 0);
      if (!within(closed_form(spec(n, c1, ln), 0), b0)) break;
      for (int N1 = 0;; ++N1) {
        const RadialMode a = closed_form(spec(n, c1, ln), N1);
        if (!within(a, b0)) break;
        for (int N2 = 0;; ++N2) {
          const RadialMode b = closed_form(spec(N - n, c2, lNn), N2);
          if (!within(a, b)) break;
          const TotalEnergy t = total_energy(a, b);
          entries.push_back(Entry{t.energy, t.energy_exact, {N1, N2, ln, lNn}, N1 + N2,
                                  dim_harm(n, ln) * dim_harm(N - n, lNn)});
        }
      }
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.exact && b.exact) return *a.exact < *b.exact;
    return a.E < b.E;
  });
  for (std::size_t i = 0; i < entries.size();) {
    Level level;
    level.E = entries[i].E;
    level.E_exact = entries[i].exact;
    std::size_t j = i;
    for (; j < entries.size() && same_level(entries[i], entries[j]); ++j) {
      level.contributors.push_back(entries[j].who);
      level.degeneracy += entries[j].dim;
      const auto& f = entries[i];
      const auto& g = entries[j];
      if (g.p != f.p || g.who.l_n != f.who.l_n || g.who.l_Nn != f.who.l_Nn) level.accidental = true;
    }
    table.levels.push_back(std::move(level));
    i = j;
  }
  return table;
}

bool CountReport::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

CountReport oscillator_count_check(int N, int l_max) {
  CountReport rep;
  rep.N = N;
  rep.l_max = l_max;
  for (int n = 1; n <= N - 1; ++n) {
    for (int l = 0; l <= l_max; ++l) {
      std::int64_t count = 0;
      for (int p = 0; 2 * p <= l; ++p) {
        for (int ln = 0; ln <= l - 2 * p; ++ln) {
          count += (p + 1) * dim_harm(n, ln) * dim_harm(N - n, l - 2 * p - ln);
        }
      }
      CountRow row{n, l, count, binomial(l + N - 1, N - 1), false};
      row.pass = row.count == row.expected;
      rep.rows.push_back(row);
    }
  }
  return rep;
}

}  // namespace singosc
