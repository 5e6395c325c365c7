#include "singosc/param_scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace singosc {

ParamBinding ParamBinding::numeric(Rational hbar, Rational omega, Rational c1, Rational c2) {
  ParamBinding b;
  b.values = {std::move(hbar), std::move(omega), std::move(c1), std::move(c2)};
  return b;
}

ParamScalar::ParamScalar(Rational constant) {
  if (!constant.is_zero()) terms_.emplace_back(ParamMono{}, std::move(constant));
}

ParamScalar ParamScalar::symbol(Param p, unsigned power) {
  ParamMono m{};
  m[static_cast<int>(p)] = static_cast<std::uint8_t>(power);
  return monomial(Rational(1), m);
}

ParamScalar ParamScalar::monomial(Rational coef, const ParamMono& exps) {
  ParamScalar s;
  if (!coef.is_zero()) s.terms_.emplace_back(exps, std::move(coef));
  return s;
}

ParamScalar ParamScalar::from_unsorted(std::vector<Term> terms) {
  std::map<ParamMono, Rational> acc;
  for (auto& [m, c] : terms) acc[m] += c;
  ParamScalar s;
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) s.terms_.emplace_back(m, std::move(c));
  }
  return s;
}

int ParamScalar::hbar_degree_min() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = m[0];
    if (best < 0 || d < best) best = d;
  }
  return best;
}

ParamScalar ParamScalar::substitute(const ParamBinding& binding) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    ParamMono rest = m;
    Rational coef = c;
    for (int k = 0; k < kParamCount; ++k) {
      if (m[k] != 0 && binding.values[k]) {
        coef *= pow(*binding.values[k], m[k]);
        rest[k] = 0;
      }
    }
    out.emplace_back(rest, std::move(coef));
  }
  return from_unsorted(std::move(out));
}

Rational ParamScalar::evaluate(const ParamBinding& binding) const {
  ParamScalar s = substitute(binding);
  if (s.terms_.empty()) return Rational(0);
  if (s.terms_.size() != 1 || s.terms_[0].first != ParamMono{}) {
    throw std::invalid_argument("ParamScalar::evaluate: unbound parameter");
  }
  return s.terms_[0].second;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& rhs) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& rhs) { return *this += -rhs; }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  std::vector<ParamScalar::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ParamMono m{};
      for (int k = 0; k < kParamCount; ++k) m[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
      out.emplace_back(m, ca * cb);
    }
  }
  return ParamScalar::from_unsorted(std::move(out));
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& rhs) { return *this = *this * rhs; }

std::string ParamScalar::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr const char* kNames[kParamCount] = {"hbar", "omega", "c1", "c2"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = -coef;
    }
    first = false;
    bool constant = m == ParamMono{};
    if (constant || !coef.is_one()) os << coef.to_string();
    bool need_star = !constant && !coef.is_one();
    for (int k = 0; k < kParamCount; ++k) {
      if (m[k] == 0) continue;
      if (need_star) os << '*';
      os << kNames[k];
      if (m[k] > 1) os << '^' << static_cast<int>(m[k]);
      need_star = true;
    }
  }
  return os.str();
}

ParamScalar pow(const ParamScalar& base, unsigned exponent) {
  ParamScalar result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace singosc
