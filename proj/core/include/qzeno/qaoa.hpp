#pragma once

#include <cstdint>
#include <map>
#include <variant>

#include "qzeno/cnf.hpp"
#include "qzeno/zeno.hpp"

namespace qzeno {

// Alternation schedule: within stage i the problem unitary is applied
// problem_reps times, then the mixer unitary mixer_reps times (the product
// reads right to left).
struct Schedule {
  struct Stage {
    int mixer_reps = 0;    // k_i
    int problem_reps = 0;  // l_i
  };
  std::vector<Stage> stages;
  double delta = 0.1;

  int kappa() const { return static_cast<int>(stages.size()); }
  std::uint64_t nu() const;
  void validate() const;  // kappa >= 1, some nonzero power, delta >= 0
};

struct UniformInit {};
using InitialState = std::variant<UniformInit, FullState>;

enum class ResidualKind { None, Uniform, Explicit };

struct RunResult {
  ReducedState final_reduced;
  double residual_norm_sq = 0.0;
  ResidualKind residual_kind = ResidualKind::None;
  Vector residual;  // populated for ResidualKind::Explicit
  double expectation_constrained = 0.0;  // renormalized within the subspace
  double expectation_full = 0.0;         // on the lifted state
  std::uint64_t nu = 0;
  double wall_seconds = 0.0;
};

// Uniform superposition over all 2^n basis states.
FullState initial_uniform(int n);

// Constrained run in the reduced space: enumerate the models of the first
// k_constraint clauses, compress, alternate the cached reduced unitaries.
// Never touches a 2^n-sized object when psi0 is UniformInit.
// Throws EmptySubspace when the constraint prefix has no model.
RunResult run_reduced(const CnfFormula& f, int k_constraint,
                      const Schedule& schedule,
                      const InitialState& psi0 = UniformInit{});

// As run_reduced but on pre-enumerated/pre-built operators (timing harness).
RunResult run_reduced_with_ops(const CnfFormula& f, const SelectionBasis& basis,
                               const ReducedOperators& ops,
                               const Schedule& schedule,
                               const InitialState& psi0 = UniformInit{});

// Unconstrained full-space run with implicit operators: diagonal phases for
// the problem unitary, per-qubit gates for the mixer. n <= 20.
RunResult run_full(const CnfFormula& f, const Schedule& schedule,
                   const InitialState& psi0 = UniformInit{});

// Constrained full-space reference on materialized projected Hamiltonians.
// Cross-check oracle for run_reduced; n <= 12.
RunResult run_full_zeno(const CnfFormula& f, int k_constraint,
                        const Schedule& schedule,
                        const InitialState& psi0 = UniformInit{});

// Reconstructs the lifted full state (reduced part scattered plus residual).
FullState lift_result(const RunResult& result);

// Multinomial measurement outcomes of the lifted state.
std::map<std::uint64_t, std::uint64_t> sample(const RunResult& result,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

struct SearchSpace {
  int kappa_min = 1;
  int kappa_max = 5;
  int power_min = 0;
  int power_max = 10;
  double delta_min = 0.05;
  double delta_max = 1.0;
};

// Random schedule search maximizing the constrained expectation.
struct SearchResult {
  RunResult best;
  Schedule schedule;
  int trials = 0;
};
SearchResult random_search(const CnfFormula& f, int k_constraint,
                           const SearchSpace& space, int trials,
                           std::uint64_t seed);

struct EquivalenceReport {
  int cases = 0;
  double max_state_error = 0.0;
  double max_expectation_error = 0.0;
};

// Randomized cross-check of the reduced run against the projected full-space
// reference on the final lifted states and on both expectations.
EquivalenceReport verify_schedule_equivalence(int cases, std::uint64_t seed,
                                              int threads = 0);

}  // namespace qzeno
