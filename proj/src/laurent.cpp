#include "singosc/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace singosc {

Frame Frame::checked(int N, int n) {
  if (N < 2 || N > kMaxDim) {
    throw std::invalid_argument("dimension N=" + std::to_string(N) + " outside [2, " +
                                std::to_string(kMaxDim) + "]");
  }
  if (n < 1 || n > N - 1) {
    throw std::invalid_argument("partition n=" + std::to_string(n) + " outside [1, N-1]");
  }
  return Frame{N, n};
}

// ---------------------------------------------------------------------------
// LaurentAccumulator

void LaurentAccumulator::insert(const Mono& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void LaurentAccumulator::add(const Mono& m, const Rational& c) {
  if (c.is_zero()) return;
  for (int block = 0; block < 2; ++block) {
    const int lead = frame_.block_lead(block);
    if (m.e[lead] < 2) continue;
    // x_lead^2 = r_block^2 - sum of the other squares in the block.
    Mono base = m;
    base.e[lead] = static_cast<std::int8_t>(base.e[lead] - 2);
    Mono with_r = base;
    with_r.e[block == 0 ? Mono::kS1 : Mono::kS2]++;
    add(with_r, c);
    const Rational neg = -c;
    for (int i = lead + 1; i < lead + frame_.block_size(block); ++i) {
      Mono other = base;
      other.e[i] = static_cast<std::int8_t>(other.e[i] + 2);
      add(other, neg);
    }
    return;
  }
  insert(m, c);
}

void LaurentAccumulator::add(const LaurentCoeff& value, const Rational& scale) {
  for (const auto& [m, c] : value.terms_) insert(m, c * scale);
}

void LaurentAccumulator::add_product(const LaurentCoeff& a, const LaurentCoeff& b,
                                     const Rational& scale) {
  for (const auto& [ma, ca] : a.terms_) {
    const Rational cs = ca * scale;
    for (const auto& [mb, cb] : b.terms_) add(ma + mb, cs * cb);
  }
}

LaurentCoeff LaurentAccumulator::take() {
  LaurentCoeff out(frame_);
  out.terms_.reserve(terms_.size());
  for (auto& [m, c] : terms_) {
    if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
  }
  terms_.clear();
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// LaurentCoeff

LaurentCoeff LaurentCoeff::constant(Frame frame, const Rational& value) {
  LaurentCoeff c(frame);
  if (!value.is_zero()) c.terms_.emplace_back(Mono{}, value);
  return c;
}

LaurentCoeff LaurentCoeff::scalar(Frame frame, const ParamScalar& value,
                                  const ParamBinding& binding) {
  LaurentAccumulator acc(frame);
  const ParamScalar bound = value.substitute(binding);
  for (const auto& [pm, coef] : bound.terms()) {
    Mono m;
    for (int k = 0; k < kParamCount; ++k) m.e[Mono::kParam0 + k] = static_cast<std::int8_t>(pm[k]);
    acc.add(m, coef);
  }
  return acc.take();
}

LaurentCoeff LaurentCoeff::coordinate(Frame frame, int i) {
  if (i < 0 || i >= frame.N) throw std::out_of_range("coordinate index out of range");
  LaurentCoeff c(frame);
  Mono m;
  m.e[i] = 1;
  c.terms_.emplace_back(m, Rational(1));
  return c;
}

LaurentCoeff LaurentCoeff::radius_sq(Frame frame, int block, int power) {
  LaurentCoeff c(frame);
  Mono m;
  m.e[block == 0 ? Mono::kS1 : Mono::kS2] = static_cast<std::int8_t>(power);
  c.terms_.emplace_back(m, Rational(1));
  return c;
}

LaurentCoeff LaurentCoeff::derivative(int i) const {
  LaurentAccumulator acc(frame_);
  const int s_slot = frame_.block_of(i) == 0 ? Mono::kS1 : Mono::kS2;
  for (const auto& [m, c] : terms_) {
    if (m.e[i] != 0) {
      Mono d = m;
      d.e[i]--;
      acc.add(d, c * Rational(m.e[i]));
    }
    if (m.e[s_slot] != 0) {
      // d/dx_i (r^2)^k = 2k x_i (r^2)^{k-1}
      Mono d = m;
      d.e[s_slot]--;
      d.e[i]++;
      acc.add(d, c * Rational(2 * m.e[s_slot]));
    }
  }
  return acc.take();
}

LaurentCoeff LaurentCoeff::substitute(const ParamBinding& binding) const {
  LaurentAccumulator acc(frame_);
  for (const auto& [m, c] : terms_) {
    Mono rest = m;
    Rational coef = c;
    for (int k = 0; k < kParamCount; ++k) {
      const int slot = Mono::kParam0 + k;
      if (m.e[slot] != 0 && binding.values[k]) {
        coef *= pow(*binding.values[k], static_cast<unsigned>(m.e[slot]));
        rest.e[slot] = 0;
      }
    }
    acc.add(rest, coef);
  }
  return acc.take();
}

std::pair<int, int> LaurentCoeff::denominator_powers() const {
  int j = 0;
  int k = 0;
  for (const auto& [m, c] : terms_) {
    j = std::max(j, -static_cast<int>(m.e[Mono::kS1]));
    k = std::max(k, -static_cast<int>(m.e[Mono::kS2]));
  }
  return {j, k};
}

LaurentCoeff LaurentCoeff::hbar_coefficient(int power) const {
  LaurentCoeff out(frame_);
  const int slot = Mono::kParam0 + static_cast<int>(Param::hbar);
  for (const auto& [m, c] : terms_) {
    if (m.e[slot] != power) continue;
    Mono r = m;
    r.e[slot] = 0;
    out.terms_.emplace_back(r, c);
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

LaurentCoeff LaurentCoeff::operator-() const {
  LaurentCoeff out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentCoeff& LaurentCoeff::operator+=(const LaurentCoeff& rhs) {
  if (frame_.N == 0) frame_ = rhs.frame_;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
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

LaurentCoeff& LaurentCoeff::operator-=(const LaurentCoeff& rhs) { return *this += -rhs; }

LaurentCoeff& LaurentCoeff::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

LaurentCoeff operator*(const LaurentCoeff& a, const LaurentCoeff& b) {
  LaurentAccumulator acc(a.frame_.N != 0 ? a.frame_ : b.frame_);
  acc.add_product(a, b, Rational(1));
  return acc.take();
}

std::string LaurentCoeff::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr const char* kParams[kParamCount] = {"hbar", "omega", "c1", "c2"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = -coef;
    }
    first = false;
    std::vector<std::string> factors;
    auto put = [&](const std::string& name, int e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    };
    for (int i = 0; i < frame_.N; ++i) put("x" + std::to_string(i + 1), m.e[i]);
    put("r1sq", m.e[Mono::kS1]);
    put("r2sq", m.e[Mono::kS2]);
    for (int k = 0; k < kParamCount; ++k) put(kParams[k], m.e[Mono::kParam0 + k]);
    if (factors.empty() || !coef.is_one()) factors.insert(factors.begin(), coef.to_string());
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

}  // namespace singosc
