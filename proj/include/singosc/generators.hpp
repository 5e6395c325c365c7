#pragma once

#include <utility>
#include <vector>

#include "singosc/diff_op.hpp"
#include "singosc/phase_fn.hpp"

namespace singosc {

/// Sign of the c2 barrier inside B. The barrier_sum form adds c2/r2^2; only the
/// difference of the two block Hamiltonians commutes with H.
enum class BSign { block_difference, barrier_sum };

struct QuantumOptions {
  ParamBinding binding = ParamBinding::symbolic();
  BSign b_sign = BSign::block_difference;
};

/// Integrals of the double singular oscillator as real differential
/// operators (p_i = -i hbar d_i with every factor of i cancelled).
///
/// J and K hold the real rotation generators hbar (x_i d_j - x_j d_i); the
/// physical angular momenta are -i times these, so J2 and K2 below equal the
/// physical Casimirs sum_{i<j} J_ij^2.
struct QuantumGenerators {
  Frame frame;
  DiffOp H;
  DiffOp A;
  DiffOp B;
  std::vector<DiffOp> J;
  std::vector<std::pair<int, int>> J_index;
  std::vector<DiffOp> K;
  std::vector<std::pair<int, int>> K_index;
  DiffOp J2;
  DiffOp K2;
};

QuantumGenerators build_quantum(int N, int n, const QuantumOptions& options = {});

/// Classical counterparts as phase-space polynomials.
struct ClassicalGenerators {
  Frame frame;
  PhaseFn H;
  PhaseFn A;
  PhaseFn B;
  std::vector<PhaseFn> J;
  std::vector<std::pair<int, int>> J_index;
  std::vector<PhaseFn> K;
  std::vector<std::pair<int, int>> K_index;
  PhaseFn J2;
  PhaseFn K2;
};

ClassicalGenerators build_classical(int N, int n,
                                    const ParamBinding& binding = ParamBinding::symbolic());

}  // namespace singosc
