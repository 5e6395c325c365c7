#include "singosc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <sstream>
#include <thread>

namespace singosc {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class Op>
std::size_t count_terms(const Op& op) {
  return op.term_count();
}

IdentityCheck zero_check(std::string name, std::string anchor, std::size_t residual,
                         double seconds, std::string note = {}) {
  IdentityCheck c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.residual_terms = residual;
  c.pass = residual == 0;
  c.seconds = seconds;
  c.note = std::move(note);
  return c;
}

using Task = std::function<IdentityCheck()>;

std::vector<IdentityCheck> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<IdentityCheck> out(tasks.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
  } else {
    for (std::size_t start = 0; start < tasks.size(); start += threads) {
      std::vector<std::future<IdentityCheck>> batch;
      const std::size_t end = std::min(tasks.size(), start + threads);
      for (std::size_t i = start; i < end; ++i) batch.push_back(std::async(std::launch::async, tasks[i]));
      for (std::size_t i = start; i < end; ++i) out[i] = batch[i - start].get();
    }
  }
  return out;
}

/// Merges per-sample reports: an entry passes only if it passes everywhere.
void merge_into(std::vector<IdentityCheck>& acc, const std::vector<IdentityCheck>& next) {
  if (acc.empty()) {
    acc = next;
    return;
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    acc[i].pass = acc[i].pass && next[i].pass;
    acc[i].residual_terms = std::max(acc[i].residual_terms, next[i].residual_terms);
    acc[i].seconds += next[i].seconds;
    if (acc[i].note.empty()) acc[i].note = next[i].note;
  }
}

void sort_entries(std::vector<IdentityCheck>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const IdentityCheck& a, const IdentityCheck& b) { return a.name < b.name; });
}

int delta(int a, int b) { return a == b ? 1 : 0; }

/// Looks up the rotation generator for an ordered index pair, with the
/// antisymmetric sign; nullptr with sign 0 on the diagonal.
template <class Op>
std::pair<const Op*, int> rotation(const std::vector<Op>& ops,
                                   const std::vector<std::pair<int, int>>& index, int a, int b) {
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] == std::pair{a, b}) return {&ops[k], 1};
    if (index[k] == std::pair{b, a}) return {&ops[k], -1};
  }
  return {nullptr, 0};
}

/// sum of s * R_ab over the four Kronecker terms of the so(m) relation
///   delta_ik R_jl + delta_jl R_ik - delta_il R_jk - delta_jk R_il
template <class Op>
Op so_rhs(Frame f, const std::vector<Op>& ops, const std::vector<std::pair<int, int>>& index,
          int i, int j, int k, int l) {
  Op out(f);
  auto add = [&](int d, int a, int b, int s) {
    if (d == 0) return;
    auto [op, sign] = rotation(ops, index, a, b);
    if (op != nullptr) out += *op * Rational(s * sign);
  };
  add(delta(i, k), j, l, 1);
  add(delta(j, l), i, k, 1);
  add(delta(i, l), j, k, -1);
  add(delta(j, k), i, l, -1);
  return out;
}


}  // namespace

// ---------------------------------------------------------------------------

bool VerificationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const IdentityCheck& e) { return e.pass; });
}

const IdentityCheck* VerificationReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<ParamBinding> sample_bindings(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 97);
  std::uniform_int_distribution<int> den(1, 13);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  std::vector<ParamBinding> out;
  for (int s = 0; s < count; ++s) {
    Rational h = draw();
    Rational w = draw();
    Rational c1 = draw();
    Rational c2 = draw();
    out.push_back(ParamBinding::numeric(h, w, c1, c2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuantumEvaluator

QuantumEvaluator::QuantumEvaluator(const QuantumGenerators& g, const DiffOp& C, ParamBinding binding)
    : g_(g), C_(C), binding_(std::move(binding)), identity_(DiffOp::identity(g.frame)) {}

const DiffOp& QuantumEvaluator::generator(Gen g) const {
  switch (g) {
    case Gen::H: return g_.H;
    case Gen::A: return g_.A;
    case Gen::B: return g_.B;
    case Gen::C: return C_;
    case Gen::J2: return g_.J2;
    case Gen::K2: return g_.K2;
  }
  return identity_;
}

const DiffOp& QuantumEvaluator::word(const std::vector<Gen>& w) {
  if (w.empty()) return identity_;
  if (w.size() == 1) return generator(w[0]);
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  const std::vector<Gen> tail(w.begin() + 1, w.end());
  DiffOp value = generator(w[0]) * word(tail);
  return cache_.emplace(w, std::move(value)).first->second;
}

DiffOp QuantumEvaluator::term_operator(const RelationTerm& t) {
  if (!t.is_anticommutator()) return word(t.left);
  const DiffOp& l = word(t.left);
  const DiffOp& r = word(t.right);
  return anticommutator(l, r);
}

DiffOp QuantumEvaluator::term_value(const RelationTerm& t) {
  DiffOp op = term_operator(t);
  return op.left_multiply(LaurentCoeff::scalar(g_.frame, t.coefficient(), binding_));
}

DiffOp QuantumEvaluator::side(const std::vector<RelationTerm>& terms) {
  DiffOp out(g_.frame);
  for (const auto& t : terms) out += term_value(t);
  return out;
}

DiffOp QuantumEvaluator::lhs(const Relation& r) {
  if (r.bracket) return commutator(generator(r.bracket->first), generator(r.bracket->second));
  return side(r.lhs);
}

DiffOp QuantumEvaluator::residual(const Relation& r) { return lhs(r) - side(r.rhs); }

// ---------------------------------------------------------------------------
// ClassicalEvaluator

ClassicalEvaluator::ClassicalEvaluator(const ClassicalGenerators& g, const PhaseFn& C,
                                       ParamBinding binding)
    : g_(g), C_(C), binding_(std::move(binding)), identity_(PhaseFn::constant(g.frame, 1)) {}

const PhaseFn& ClassicalEvaluator::generator(Gen g) const {
  switch (g) {
    case Gen::H: return g_.H;
    case Gen::A: return g_.A;
    case Gen::B: return g_.B;
    case Gen::C: return C_;
    case Gen::J2: return g_.J2;
    case Gen::K2: return g_.K2;
  }
  return identity_;
}

const PhaseFn& ClassicalEvaluator::word(const std::vector<Gen>& w) {
  if (w.empty()) return identity_;
  if (w.size() == 1) return generator(w[0]);
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  const std::vector<Gen> tail(w.begin() + 1, w.end());
  PhaseFn value = generator(w[0]) * word(tail);
  return cache_.emplace(w, std::move(value)).first->second;
}

PhaseFn ClassicalEvaluator::term_operator(const RelationTerm& t) {
  if (!t.is_anticommutator()) return word(t.left);
  PhaseFn l = word(t.left);
  return l * word(t.right) * Rational(2);
}

PhaseFn ClassicalEvaluator::term_value(const RelationTerm& t) {
  return term_operator(t) *
         PhaseFn::from_coeff(LaurentCoeff::scalar(g_.frame, t.coefficient(), binding_));
}

PhaseFn ClassicalEvaluator::side(const std::vector<RelationTerm>& terms) {
  PhaseFn out(g_.frame);
  for (const auto& t : terms) out += term_value(t);
  return out;
}

PhaseFn ClassicalEvaluator::lhs(const Relation& r) {
  if (r.bracket) return poisson_bracket(generator(r.bracket->first), generator(r.bracket->second));
  return side(r.lhs);
}

PhaseFn ClassicalEvaluator::residual(const Relation& r) { return lhs(r) - side(r.rhs); }

// ---------------------------------------------------------------------------
// Arbitration and mutation

namespace {

/// Division of `residual` by `op` with a quotient restricted to parameter
/// monomials. Multiplying by a parameter monomial never triggers the
/// coordinate reduction, so leading terms divide exactly.
std::optional<ParamScalar> divide_by_params(const DiffOp& residual, const DiffOp& op,
                                            const ParamBinding& binding) {
  if (op.is_zero()) return std::nullopt;
  const Frame f = op.frame();
  const auto& [beta_o, coef_o] = *op.terms().rbegin();
  const auto& [mono_o, c_o] = coef_o.terms().back();
  DiffOp rem = residual;
  ParamScalar quotient;
  for (int guard = 0; guard < 4096 && !rem.is_zero(); ++guard) {
    const auto& [beta_r, coef_r] = *rem.terms().rbegin();
    const auto& [mono_r, c_r] = coef_r.terms().back();
    if (beta_r != beta_o) return std::nullopt;
    ParamMono shift{};
    for (int s = 0; s < Mono::kSlots; ++s) {
      const int d = mono_r.e[s] - mono_o.e[s];
      if (s < Mono::kParam0) {
        if (d != 0) return std::nullopt;
      } else {
        if (d < 0) return std::nullopt;
        shift[s - Mono::kParam0] = static_cast<std::uint8_t>(d);
      }
    }
    const ParamScalar step = ParamScalar::monomial(c_r / c_o, shift);
    quotient += step;
    DiffOp sub = op;
    rem -= sub.left_multiply(LaurentCoeff::scalar(f, step, binding));
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

}  // namespace

std::optional<TermCorrection> isolate_single_term(QuantumEvaluator& ev, const Relation& r,
                                                  const DiffOp& residual) {
  if (residual.is_zero()) return std::nullopt;
  auto scan = [&](const std::vector<RelationTerm>& terms, bool on_lhs) -> std::optional<TermCorrection> {
    for (const auto& t : terms) {
      const DiffOp op = ev.term_operator(t);
      if (auto q = divide_by_params(residual, op, ev.binding())) {
        return TermCorrection{t.label(), on_lhs, *q};
      }
    }
    return std::nullopt;
  };
  if (auto hit = scan(r.lhs, true)) return hit;
  return scan(r.rhs, false);
}

std::vector<std::pair<std::string, Relation>> unit_mutations(const Relation& r) {
  std::vector<std::pair<std::string, Relation>> out;
  for (std::size_t i = 0; i < r.rhs.size(); ++i) {
    Relation m = r;
    m.rhs[i].constant += Rational(1);
    out.emplace_back(r.name + " rhs[" + std::to_string(i) + "] " + r.rhs[i].label() + " +1", std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quantum suite

namespace {

std::vector<IdentityCheck> quantum_pass(int N, int n, const ParamBinding& binding, unsigned threads,
                                        std::vector<std::string>* notes) {
  QuantumOptions qo;
  qo.binding = binding;
  const QuantumGenerators g = build_quantum(N, n, qo);
  const Frame f = g.frame;
  const DiffOp C = commutator(g.A, g.B);
  const LaurentCoeff hbar = LaurentCoeff::scalar(f, ParamScalar::symbol(Param::hbar), binding);

  std::vector<Task> tasks;
  auto bracket_zero = [&](std::string name, std::string anchor, const DiffOp* p, const DiffOp* q) {
    tasks.push_back([name, anchor, p, q] {
      const auto t0 = Clock::now();
      const DiffOp r = commutator(*p, *q);
      return zero_check(name, anchor, count_terms(r), since(t0));
    });
  };
  bracket_zero("commute.[H,A]", "integrals:[H,A]=0", &g.H, &g.A);
  bracket_zero("commute.[H,B]", "integrals:[H,B]=0", &g.H, &g.B);
  bracket_zero("commute.[H,C]", "integrals:[H,C]=0", &g.H, &C);
  bracket_zero("commute.[H,J2]", "integrals:[H,J2]=0", &g.H, &g.J2);
  bracket_zero("commute.[H,K2]", "integrals:[H,K2]=0", &g.H, &g.K2);
  bracket_zero("central.[A,J2]", "central:[A,J2]=0", &g.A, &g.J2);
  bracket_zero("central.[A,K2]", "central:[A,K2]=0", &g.A, &g.K2);
  bracket_zero("central.[B,J2]", "central:[B,J2]=0", &g.B, &g.J2);
  bracket_zero("central.[B,K2]", "central:[B,K2]=0", &g.B, &g.K2);
  bracket_zero("central.[J2,K2]", "central:[J2,K2]=0", &g.J2, &g.K2);

  tasks.push_back([&] {
    const auto t0 = Clock::now();
    IdentityCheck c;
    c.name = "q3.C=[A,B]";
    c.anchor = "quadratic-algebra:C=[A,B]";
    c.residual_terms = 0;
    c.pass = !C.is_zero() && C.order() == 3;
    c.note = "C has derivative order " + std::to_string(C.order()) + " and " +
             std::to_string(C.term_count()) + " terms";
    c.seconds = since(t0);
    return c;
  });

  auto relation_task = [&](Relation rel, bool arbitrate) {
    tasks.push_back([&g, &C, binding, rel, arbitrate] {
      const auto t0 = Clock::now();
      QuantumEvaluator ev(g, C, binding);
      const DiffOp r = ev.residual(rel);
      IdentityCheck c = zero_check(rel.name, rel.anchor, count_terms(r), 0.0);
      if (!c.pass && arbitrate) {
        if (auto fix = isolate_single_term(ev, rel, r)) {
          std::ostringstream os;
          os << "residual equals (" << fix->delta.to_string() << ") * [" << fix->term_label
             << "] on the " << (fix->on_lhs ? "left" : "right") << " side";
          c.note = os.str();
        } else {
          c.note = "no single-term correction explains the residual";
        }
      }
      c.seconds = since(t0);
      return c;
    });
  };
  relation_task(quantum_ac_relation(N, n), false);
  relation_task(quantum_bc_relation(N, n), false);
  relation_task(quantum_casimir_relation(N, n), true);

  // so(n) and so(N-n)
  for (int s = 0; s < 2; ++s) {
    const auto& ops = s == 0 ? g.J : g.K;
    const auto& index = s == 0 ? g.J_index : g.K_index;
    const std::string label = s == 0 ? "so(n)" : "so(N-n)";
    const std::string anchor = s == 0 ? "rotations:so(n)" : "rotations:so(N-n)";
    const std::string empty_note = ops.empty() ? "one-dimensional block: no rotation generators" : "";
    tasks.push_back([&, label, anchor, empty_note] {
      const auto t0 = Clock::now();
      std::size_t residual = 0;
      for (std::size_t a = 0; a < ops.size(); ++a) {
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
          auto [i, j] = index[a];
          auto [k, l] = index[b];
          DiffOp rhs = so_rhs(f, ops, index, i, j, k, l);
          rhs.left_multiply(-hbar);
          residual += (commutator(ops[a], ops[b]) - rhs).term_count();
        }
      }
      return zero_check(label + ".brackets", anchor + ":brackets", residual, since(t0), empty_note);
    });
    tasks.push_back([&, label, anchor, empty_note] {
      const auto t0 = Clock::now();
      std::size_t residual = 0;
      for (const auto& op : ops) {
        for (const DiffOp* x : {&g.H, &g.A, &g.B, &g.J2, &g.K2}) residual += commutator(*x, op).term_count();
      }
      return zero_check(label + ".central", anchor + ":[X,generator]=0", residual, since(t0), empty_note);
    });
  }
  tasks.push_back([&] {
    const auto t0 = Clock::now();
    std::size_t residual = 0;
    for (const auto& j : g.J) {
      for (const auto& k : g.K) residual += commutator(j, k).term_count();
    }
    return zero_check("so.[J,K]", "rotations:[J_ij,K_kl]=0", residual, since(t0));
  });

  // Lowest-order hbar content against the Poisson tables.
  auto limit_task = [&](std::string name, std::vector<RelationTerm> quantum,
                        std::vector<RelationTerm> classical) {
    tasks.push_back([name, quantum, classical] {
      const auto t0 = Clock::now();
      const auto q = classical_limit_terms(quantum);
      const auto c = canonical_classical_terms(classical);
      // Count terms present on one side only or with a different constant.
      std::size_t mismatch = 0;
      for (const auto& t : q) mismatch += std::count(c.begin(), c.end(), t) == 0;
      for (const auto& t : c) mismatch += std::count(q.begin(), q.end(), t) == 0;
      return zero_check(name, "classical-limit:" + name.substr(6), mismatch, since(t0));
    });
  };
  {
    const Relation qac = quantum_ac_relation(N, n);
    const Relation qbc = quantum_bc_relation(N, n);
    const Relation qk = quantum_casimir_relation(N, n);
    limit_task("limit.[A,C]", qac.rhs, classical_ac_relation().rhs);
    limit_task("limit.[B,C]", qbc.rhs, classical_bc_relation().rhs);
    limit_task("limit.K=K1", residual_terms(qk), residual_terms(classical_casimir_relation()));
  }

  std::vector<IdentityCheck> out = run_tasks(tasks, threads);

  if (notes != nullptr) {
    QuantumOptions alt = qo;
    alt.b_sign = BSign::barrier_sum;
    const DiffOp bp = build_quantum(N, n, alt).B;
    const std::size_t hb = commutator(g.H, bp).term_count();
    notes->push_back("B built as H1 - H2 (barrier c1/r1^2 - c2/r2^2); with +c2/r2^2 the bracket [H,B] has " +
                     std::to_string(hb) + " residual terms");
    // A with the opposite sign on its kinetic part: A' = -A + 2 * (potential part of A).
    DiffOp potential(f);
    if (auto it = g.A.terms().find(MultiIndex{}); it != g.A.terms().end()) {
      potential = DiffOp::multiplication(it->second);
    }
    const DiffOp a_alt = potential * Rational(2) - g.A;
    const std::size_t ha = commutator(g.H, a_alt).term_count();
    notes->push_back("A prefactor read as -hbar^2/4; with +hbar^2/4 the bracket [H,A] has " +
                     std::to_string(ha) + " residual terms");
  }
  return out;
}

std::vector<IdentityCheck> classical_pass(int N, int n, const ParamBinding& binding, unsigned threads) {
  const ClassicalGenerators g = build_classical(N, n, binding);
  const Frame f = g.frame;
  const PhaseFn C = poisson_bracket(g.A, g.B);

  std::vector<Task> tasks;
  auto bracket_zero = [&](std::string name, std::string anchor, const PhaseFn* p, const PhaseFn* q) {
    tasks.push_back([name, anchor, p, q] {
      const auto t0 = Clock::now();
      const PhaseFn r = poisson_bracket(*p, *q);
      return zero_check(name, anchor, count_terms(r), since(t0));
    });
  };
  bracket_zero("commute.{H,A}", "poisson-integrals:{H,A}=0", &g.H, &g.A);
  bracket_zero("commute.{H,B}", "poisson-integrals:{H,B}=0", &g.H, &g.B);
  bracket_zero("commute.{H,C}", "poisson-integrals:{H,C}=0", &g.H, &C);
  bracket_zero("commute.{H,J2}", "poisson-integrals:{H,J2}=0", &g.H, &g.J2);
  bracket_zero("commute.{H,K2}", "poisson-integrals:{H,K2}=0", &g.H, &g.K2);
  bracket_zero("central.{A,J2}", "poisson-central:{A,J2}=0", &g.A, &g.J2);
  bracket_zero("central.{A,K2}", "poisson-central:{A,K2}=0", &g.A, &g.K2);
  bracket_zero("central.{B,J2}", "poisson-central:{B,J2}=0", &g.B, &g.J2);
  bracket_zero("central.{B,K2}", "poisson-central:{B,K2}=0", &g.B, &g.K2);
  bracket_zero("central.{J2,K2}", "poisson-central:{J2,K2}=0", &g.J2, &g.K2);

  tasks.push_back([&] {
    const auto t0 = Clock::now();
    IdentityCheck c;
    c.name = "qp3.C={A,B}";
    c.anchor = "poisson-algebra:C={A,B}";
    c.pass = !C.is_zero() && C.momentum_degree() == 3;
    c.note = "C has momentum degree " + std::to_string(C.momentum_degree());
    c.seconds = since(t0);
    return c;
  });

  auto relation_task = [&](Relation rel) {
    tasks.push_back([&g, &C, binding, rel] {
      const auto t0 = Clock::now();
      ClassicalEvaluator ev(g, C, binding);
      const PhaseFn r = ev.residual(rel);
      return zero_check(rel.name, rel.anchor, count_terms(r), since(t0));
    });
  };
  relation_task(classical_ac_relation());
  relation_task(classical_bc_relation());
  relation_task(classical_casimir_relation());

  for (int s = 0; s < 2; ++s) {
    const auto& ops = s == 0 ? g.J : g.K;
    const auto& index = s == 0 ? g.J_index : g.K_index;
    const std::string label = s == 0 ? "so(n)" : "so(N-n)";
    const std::string anchor = s == 0 ? "poisson-rotations:so(n)" : "poisson-rotations:so(N-n)";
    const std::string empty_note = ops.empty() ? "one-dimensional block: no rotation generators" : "";
    tasks.push_back([&, label, anchor, empty_note] {
      const auto t0 = Clock::now();
      std::size_t residual = 0;
      for (std::size_t a = 0; a < ops.size(); ++a) {
        for (std::size_t b = a + 1; b < ops.size(); ++b) {
          auto [i, j] = index[a];
          auto [k, l] = index[b];
          const PhaseFn rhs = so_rhs(f, ops, index, i, j, k, l);
          residual += (poisson_bracket(ops[a], ops[b]) - rhs).term_count();
        }
      }
      return zero_check(label + ".brackets", anchor + ":brackets", residual, since(t0), empty_note);
    });
    tasks.push_back([&, label, anchor, empty_note] {
      const auto t0 = Clock::now();
      std::size_t residual = 0;
      for (const auto& op : ops) {
        for (const PhaseFn* x : {&g.H, &g.A, &g.B, &g.J2, &g.K2}) {
          residual += poisson_bracket(*x, op).term_count();
        }
      }
      return zero_check(label + ".central", anchor + ":{X,generator}=0", residual, since(t0), empty_note);
    });
  }
  tasks.push_back([&] {
    const auto t0 = Clock::now();
    std::size_t residual = 0;
    for (const auto& j : g.J) {
      for (const auto& k : g.K) residual += poisson_bracket(j, k).term_count();
    }
    return zero_check("so.{J,K}", "poisson-rotations:{J_ij,K_kl}=0", residual, since(t0));
  });

  return run_tasks(tasks, threads);
}

template <class Pass>
VerificationReport run_suite(std::string suite, int N, int n, const VerifyOptions& options, Pass pass) {
  Frame::checked(N, n);
  VerificationReport report;
  report.suite = std::move(suite);
  report.N = N;
  report.n = n;
  if (!options.sampled) {
    report.mode = "symbolic";
    report.entries = pass(ParamBinding::symbolic(), &report.notes);
  } else {
    report.mode = "sampled";
    const auto bindings = sample_bindings(options.samples, options.seed);
    for (std::size_t s = 0; s < bindings.size(); ++s) {
      merge_into(report.entries, pass(bindings[s], s == 0 ? &report.notes : nullptr));
    }
    report.notes.push_back(std::to_string(options.samples) +
                           " random rational parameter points; sound with high probability");
  }
  sort_entries(report.entries);
  return report;
}

}  // namespace

VerificationReport verify_q3(int N, int n, const VerifyOptions& options) {
  return run_suite("q3", N, n, options, [&](const ParamBinding& b, std::vector<std::string>* notes) {
    return quantum_pass(N, n, b, options.threads, notes);
  });
}

VerificationReport verify_qp3(int N, int n, const VerifyOptions& options) {
  return run_suite("qp3", N, n, options, [&](const ParamBinding& b, std::vector<std::string>*) {
    return classical_pass(N, n, b, options.threads);
  });
}

}  // namespace singosc
