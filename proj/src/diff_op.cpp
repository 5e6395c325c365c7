#include "singosc/diff_op.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace singosc {

namespace {

void require_same_frame(const DiffOp& p, const DiffOp& q) {
  if (p.frame() != q.frame()) {
    throw std::invalid_argument("DiffOp: operands built for different (N, n)");
  }
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Lazily computed d^gamma q_beta for every term of a right operand.
class DerivativeCache {
 public:
  DerivativeCache(const DiffOp& q, int dim) : dim_(dim) {
    for (const auto& [beta, c] : q.terms()) {
      slots_.push_back({beta, {}});
      slots_.back().derivs.emplace(MultiIndex{}, c);
    }
  }

  std::size_t size() const { return slots_.size(); }
  const MultiIndex& beta(std::size_t j) const { return slots_[j].beta; }

  const LaurentCoeff& get(std::size_t j, const MultiIndex& gamma) {
    auto& derivs = slots_[j].derivs;
    auto it = derivs.find(gamma);
    if (it != derivs.end()) return it->second;
    int axis = 0;
    while (gamma[axis] == 0) ++axis;
    MultiIndex lower = gamma;
    lower[axis]--;
    LaurentCoeff d = get(j, lower).derivative(axis);
    return derivs.emplace(gamma, std::move(d)).first->second;
  }

 private:
  struct Slot {
    MultiIndex beta;
    std::map<MultiIndex, LaurentCoeff> derivs;
  };
  int dim_;
  std::vector<Slot> slots_;
};

}  // namespace

int total_order(const MultiIndex& beta) {
  int s = 0;
  for (auto b : beta) s += b;
  return s;
}

DiffOp DiffOp::identity(Frame frame) {
  return multiplication(LaurentCoeff::constant(frame, Rational(1)));
}

DiffOp DiffOp::multiplication(const LaurentCoeff& f) { return term(f, MultiIndex{}); }

DiffOp DiffOp::term(const LaurentCoeff& c, const MultiIndex& beta) {
  DiffOp op(c.frame());
  if (!c.is_zero()) op.terms_.emplace(beta, c);
  return op;
}

DiffOp DiffOp::partial(Frame frame, int i) {
  MultiIndex beta{};
  beta[i] = 1;
  return term(LaurentCoeff::constant(frame, Rational(1)), beta);
}

int DiffOp::order() const {
  int best = -1;
  for (const auto& [beta, c] : terms_) best = std::max(best, total_order(beta));
  return best;
}

std::size_t DiffOp::term_count() const {
  std::size_t n = 0;
  for (const auto& [beta, c] : terms_) n += c.size();
  return n;
}

LaurentCoeff DiffOp::apply(const LaurentCoeff& f) const {
  LaurentCoeff out(frame_);
  for (const auto& [beta, c] : terms_) {
    LaurentCoeff d = f;
    for (int i = 0; i < frame_.N; ++i) {
      for (int k = 0; k < beta[i]; ++k) d = d.derivative(i);
    }
    out += c * d;
  }
  return out;
}

DiffOp DiffOp::substitute(const ParamBinding& binding) const {
  DiffOp out(frame_);
  for (const auto& [beta, c] : terms_) out.add_term(beta, c.substitute(binding));
  return out;
}

void DiffOp::add_term(const MultiIndex& beta, LaurentCoeff c) {
  if (c.is_zero()) return;
  auto it = terms_.find(beta);
  if (it == terms_.end()) {
    terms_.emplace(beta, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp DiffOp::operator-() const {
  DiffOp out = *this;
  for (auto& [beta, c] : out.terms_) c = -c;
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
  if (frame_.N == 0) frame_ = rhs.frame_;
  require_same_frame(*this, rhs);
  for (const auto& [beta, c] : rhs.terms_) add_term(beta, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) {
  if (frame_.N == 0) frame_ = rhs.frame_;
  require_same_frame(*this, rhs);
  for (const auto& [beta, c] : rhs.terms_) add_term(beta, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [beta, c] : terms_) c *= s;
  return *this;
}

DiffOp& DiffOp::left_multiply(const LaurentCoeff& f) {
  TermMap out;
  for (auto& [beta, c] : terms_) {
    LaurentCoeff p = f * c;
    if (!p.is_zero()) out.emplace(beta, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

DiffOp compose(const DiffOp& p, const DiffOp& q, bool skip_leading) {
  require_same_frame(p, q);
  const Frame frame = p.frame();
  const int dim = frame.N;
  DerivativeCache cache(q, dim);
  absl::flat_hash_map<MultiIndex, LaurentAccumulator> acc;

  for (const auto& [beta1, pc] : p.terms()) {
    // Odometer over gamma <= beta1.
    MultiIndex gamma{};
    while (true) {
      bool leading = total_order(gamma) == 0;
      if (!(leading && skip_leading)) {
        std::int64_t bc = 1;
        for (int i = 0; i < dim; ++i) bc *= binomial(beta1[i], gamma[i]);
        const Rational scale(bc);
        for (std::size_t j = 0; j < cache.size(); ++j) {
          const LaurentCoeff& d = cache.get(j, gamma);
          if (d.is_zero()) continue;
          MultiIndex target = cache.beta(j);
          for (int i = 0; i < dim; ++i) {
            target[i] = static_cast<std::uint8_t>(target[i] + beta1[i] - gamma[i]);
          }
          acc.try_emplace(target, frame).first->second.add_product(pc, d, scale);
        }
      }
      int axis = 0;
      while (axis < dim && gamma[axis] == beta1[axis]) {
        gamma[axis] = 0;
        ++axis;
      }
      if (axis == dim) break;
      gamma[axis]++;
    }
  }

  DiffOp out(frame);
  for (auto& [beta, a] : acc) {
    LaurentCoeff c = a.take();
    if (!c.is_zero()) out.terms_.emplace(beta, std::move(c));
  }
  return out;
}

DiffOp operator*(const DiffOp& p, const DiffOp& q) { return compose(p, q, false); }

DiffOp commutator(const DiffOp& p, const DiffOp& q) {
  require_same_frame(p, q);
  // The gamma = 0 Leibniz terms of P Q and Q P coincide and cancel.
  return compose(p, q, true) - compose(q, p, true);
}

DiffOp anticommutator(const DiffOp& p, const DiffOp& q) {
  require_same_frame(p, q);
  return p * q + q * p;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [beta, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int i = 0; i < frame_.N; ++i) {
      if (beta[i] == 0) continue;
      os << "*d" << (i + 1);
      if (beta[i] > 1) os << "^" << static_cast<int>(beta[i]);
    }
  }
  return os.str();
}

}  // namespace singosc
