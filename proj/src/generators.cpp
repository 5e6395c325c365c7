#include "singosc/generators.hpp"

namespace singosc {

namespace {

MultiIndex unit(int i) {
  MultiIndex b{};
  b[i] = 1;
  return b;
}

MultiIndex pair_index(int i, int j) {
  MultiIndex b{};
  b[i]++;
  b[j]++;
  return b;
}

struct Symbols {
  ParamScalar hbar = ParamScalar::symbol(Param::hbar);
  ParamScalar omega = ParamScalar::symbol(Param::omega);
  ParamScalar c1 = ParamScalar::symbol(Param::c1);
  ParamScalar c2 = ParamScalar::symbol(Param::c2);
};

/// c1/r1^2 +- c2/r2^2
LaurentCoeff barrier(Frame f, const ParamBinding& b, const Symbols& s, bool subtract_second) {
  LaurentCoeff first = LaurentCoeff::scalar(f, s.c1, b) * LaurentCoeff::radius_sq(f, 0, -1);
  LaurentCoeff second = LaurentCoeff::scalar(f, s.c2, b) * LaurentCoeff::radius_sq(f, 1, -1);
  return subtract_second ? first - second : first + second;
}

/// (r^2 / 2)(c1/r1^2 + c2/r2^2)
LaurentCoeff angular_barrier(Frame f, const ParamBinding& b, const Symbols& s) {
  LaurentCoeff r2 = LaurentCoeff::radius_sq(f, 0) + LaurentCoeff::radius_sq(f, 1);
  return r2 * barrier(f, b, s, false) * Rational(1, 2);
}

std::vector<std::pair<int, int>> block_pairs(Frame f, int block) {
  std::vector<std::pair<int, int>> out;
  const int lead = f.block_lead(block);
  const int end = lead + f.block_size(block);
  for (int i = lead; i < end; ++i) {
    for (int j = i + 1; j < end; ++j) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace

QuantumGenerators build_quantum(int N, int n, const QuantumOptions& options) {
  const Frame f = Frame::checked(N, n);
  const ParamBinding& b = options.binding;
  const Symbols s;
  auto lift = [&](const ParamScalar& v) { return LaurentCoeff::scalar(f, v, b); };
  auto x = [&](int i) { return LaurentCoeff::coordinate(f, i); };
  const LaurentCoeff r1sq = LaurentCoeff::radius_sq(f, 0);
  const LaurentCoeff r2sq = LaurentCoeff::radius_sq(f, 1);
  const LaurentCoeff half_hbar_sq = lift(s.hbar * s.hbar * Rational(1, 2));
  const LaurentCoeff half_omega_sq = lift(s.omega * s.omega * Rational(1, 2));

  QuantumGenerators g;
  g.frame = f;

  // H = -(hbar^2/2) Laplacian + omega^2 r^2/2 + c1/r1^2 + c2/r2^2
  g.H = DiffOp(f);
  for (int i = 0; i < N; ++i) g.H += DiffOp::term(-half_hbar_sq, pair_index(i, i));
  g.H += DiffOp::multiplication(half_omega_sq * (r1sq + r2sq) + barrier(f, b, s, false));

  // A = -(hbar^2/4){sum x_i^2 d_j^2 - sum x_i x_j d_i d_j - (N-1) sum x_i d_i}
  //     + (r^2/2)(c1/r1^2 + c2/r2^2)
  DiffOp brace(f);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      brace += DiffOp::term(x(i) * x(i), pair_index(j, j));
      brace -= DiffOp::term(x(i) * x(j), pair_index(i, j));
    }
    brace -= DiffOp::term(x(i) * Rational(N - 1), unit(i));
  }
  brace.left_multiply(lift(s.hbar * s.hbar * Rational(-1, 4)));
  g.A = brace + DiffOp::multiplication(angular_barrier(f, b, s));

  // B = H1 - H2 up to the sign of the c2 barrier
  g.B = DiffOp(f);
  for (int i = 0; i < N; ++i) {
    LaurentCoeff c = i < n ? -half_hbar_sq : half_hbar_sq;
    g.B += DiffOp::term(c, pair_index(i, i));
  }
  g.B += DiffOp::multiplication(half_omega_sq * (r1sq - r2sq) +
                                barrier(f, b, s, options.b_sign == BSign::block_difference));

  // Real rotation generators hbar (x_i d_j - x_j d_i).
  const LaurentCoeff hb = lift(s.hbar);
  auto rotation = [&](int i, int j) {
    DiffOp r = DiffOp::term(x(i), unit(j)) - DiffOp::term(x(j), unit(i));
    return r.left_multiply(hb);
  };
  g.J_index = block_pairs(f, 0);
  g.K_index = block_pairs(f, 1);
  g.J2 = DiffOp(f);
  g.K2 = DiffOp(f);
  for (auto [i, j] : g.J_index) {
    g.J.push_back(rotation(i, j));
    g.J2 -= g.J.back() * g.J.back();
  }
  for (auto [i, j] : g.K_index) {
    g.K.push_back(rotation(i, j));
    g.K2 -= g.K.back() * g.K.back();
  }
  return g;
}

ClassicalGenerators build_classical(int N, int n, const ParamBinding& b) {
  const Frame f = Frame::checked(N, n);
  const Symbols s;
  auto lift = [&](const ParamScalar& v) { return PhaseFn::from_coeff(LaurentCoeff::scalar(f, v, b)); };
  auto x = [&](int i) { return PhaseFn::coordinate(f, i); };
  auto p = [&](int i) { return PhaseFn::momentum(f, i); };
  const PhaseFn r1sq = PhaseFn::from_coeff(LaurentCoeff::radius_sq(f, 0));
  const PhaseFn r2sq = PhaseFn::from_coeff(LaurentCoeff::radius_sq(f, 1));
  const PhaseFn half_omega_sq = lift(s.omega * s.omega * Rational(1, 2));

  ClassicalGenerators g;
  g.frame = f;

  PhaseFn kinetic1(f);
  PhaseFn kinetic2(f);
  for (int i = 0; i < N; ++i) (i < n ? kinetic1 : kinetic2) += p(i) * p(i);

  g.H = (kinetic1 + kinetic2) * Rational(1, 2) + half_omega_sq * (r1sq + r2sq) +
        PhaseFn::from_coeff(barrier(f, b, s, false));

  PhaseFn brace(f);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      brace += x(i) * x(i) * p(j) * p(j);
      brace -= x(i) * x(j) * p(i) * p(j);
    }
  }
  g.A = brace * Rational(1, 4) + PhaseFn::from_coeff(angular_barrier(f, b, s));

  g.B = (kinetic1 - kinetic2) * Rational(1, 2) + half_omega_sq * (r1sq - r2sq) +
        PhaseFn::from_coeff(barrier(f, b, s, true));

  g.J_index = block_pairs(f, 0);
  g.K_index = block_pairs(f, 1);
  g.J2 = PhaseFn(f);
  g.K2 = PhaseFn(f);
  for (auto [i, j] : g.J_index) {
    g.J.push_back(x(i) * p(j) - x(j) * p(i));
    g.J2 += g.J.back() * g.J.back();
  }
  for (auto [i, j] : g.K_index) {
    g.K.push_back(x(i) * p(j) - x(j) * p(i));
    g.K2 += g.K.back() * g.K.back();
  }
  return g;
}

}  // namespace singosc
