#include "singosc/phase_fn.hpp"

#include <sstream>
#include <stdexcept>

namespace singosc {

namespace {

void require_same_frame(const PhaseFn& a, const PhaseFn& b) {
  if (a.frame() != b.frame()) {
    throw std::invalid_argument("PhaseFn: operands built for different (N, n)");
  }
}

}  // namespace

PhaseFn PhaseFn::from_coeff(const LaurentCoeff& c) {
  PhaseFn f(c.frame());
  if (!c.is_zero()) f.terms_.emplace(MultiIndex{}, c);
  return f;
}

PhaseFn PhaseFn::constant(Frame frame, const Rational& value) {
  return from_coeff(LaurentCoeff::constant(frame, value));
}

PhaseFn PhaseFn::coordinate(Frame frame, int i) {
  return from_coeff(LaurentCoeff::coordinate(frame, i));
}

PhaseFn PhaseFn::momentum(Frame frame, int i) {
  PhaseFn f(frame);
  MultiIndex beta{};
  beta[i] = 1;
  f.terms_.emplace(beta, LaurentCoeff::constant(frame, Rational(1)));
  return f;
}

int PhaseFn::momentum_degree() const {
  int best = -1;
  for (const auto& [beta, c] : terms_) best = std::max(best, total_order(beta));
  return best;
}

std::size_t PhaseFn::term_count() const {
  std::size_t n = 0;
  for (const auto& [beta, c] : terms_) n += c.size();
  return n;
}

void PhaseFn::add_term(const MultiIndex& beta, LaurentCoeff c) {
  if (c.is_zero()) return;
  auto it = terms_.find(beta);
  if (it == terms_.end()) {
    terms_.emplace(beta, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PhaseFn PhaseFn::derivative_x(int i) const {
  PhaseFn out(frame_);
  for (const auto& [beta, c] : terms_) out.add_term(beta, c.derivative(i));
  return out;
}

PhaseFn PhaseFn::derivative_p(int i) const {
  PhaseFn out(frame_);
  for (const auto& [beta, c] : terms_) {
    if (beta[i] == 0) continue;
    MultiIndex lower = beta;
    lower[i]--;
    out.add_term(lower, c * Rational(beta[i]));
  }
  return out;
}

PhaseFn PhaseFn::substitute(const ParamBinding& binding) const {
  PhaseFn out(frame_);
  for (const auto& [beta, c] : terms_) out.add_term(beta, c.substitute(binding));
  return out;
}

PhaseFn PhaseFn::operator-() const {
  PhaseFn out = *this;
  for (auto& [beta, c] : out.terms_) c = -c;
  return out;
}

PhaseFn& PhaseFn::operator+=(const PhaseFn& rhs) {
  if (frame_.N == 0) frame_ = rhs.frame_;
  require_same_frame(*this, rhs);
  for (const auto& [beta, c] : rhs.terms_) add_term(beta, c);
  return *this;
}

PhaseFn& PhaseFn::operator-=(const PhaseFn& rhs) {
  if (frame_.N == 0) frame_ = rhs.frame_;
  require_same_frame(*this, rhs);
  for (const auto& [beta, c] : rhs.terms_) add_term(beta, -c);
  return *this;
}

PhaseFn& PhaseFn::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [beta, c] : terms_) c *= s;
  return *this;
}

PhaseFn operator*(const PhaseFn& a, const PhaseFn& b) {
  require_same_frame(a, b);
  const Frame frame = a.frame();
  absl::flat_hash_map<MultiIndex, LaurentAccumulator> acc;
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) {
      MultiIndex target{};
      for (int i = 0; i < kMaxDim; ++i) target[i] = static_cast<std::uint8_t>(ba[i] + bb[i]);
      acc.try_emplace(target, frame).first->second.add_product(ca, cb, Rational(1));
    }
  }
  PhaseFn out(frame);
  for (auto& [beta, x] : acc) {
    LaurentCoeff c = x.take();
    if (!c.is_zero()) out.terms_.emplace(beta, std::move(c));
  }
  return out;
}

PhaseFn poisson_bracket(const PhaseFn& f, const PhaseFn& g) {
  require_same_frame(f, g);
  PhaseFn out(f.frame());
  for (int i = 0; i < f.frame().N; ++i) {
    out += f.derivative_x(i) * g.derivative_p(i);
    out -= f.derivative_p(i) * g.derivative_x(i);
  }
  return out;
}

std::string PhaseFn::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [beta, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int i = 0; i < frame_.N; ++i) {
      if (beta[i] == 0) continue;
      os << "*p" << (i + 1);
      if (beta[i] > 1) os << "^" << static_cast<int>(beta[i]);
    }
  }
  return os.str();
}

}  // namespace singosc
