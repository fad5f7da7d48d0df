#pragma once

#include <cstdint>

#include "qzeno/hamiltonians.hpp"
#include "qzeno/linalg.hpp"

namespace qzeno {

struct FullState {
  Vector amplitudes;
  int n = 0;

  static FullState basis_state(int n, std::uint64_t index);
};

// Amplitudes on the selected indices. Its norm equals the weight of the
// originating state inside the subspace and stays constant under reduced
// evolution; it is not 1 in general.
struct ReducedState {
  Vector amplitudes;
  SelectionBasis basis;
};

// Orthogonal split of a full state: the part inside the subspace (gathered)
// and the untouched remainder, which is zero on every selected index.
struct ZenoSplit {
  ReducedState reduced;
  FullState residual;
};

ZenoSplit compress(const FullState& psi, const SelectionBasis& basis);

// Scatter the reduced amplitudes back and add the residual;
// lift(compress(psi)) == psi exactly.
FullState lift(const ZenoSplit& split);

ReducedState evolve_reduced(const ReducedState& state, const Matrix& u,
                            int repetitions);

// Full-space evolution under the projected Hamiltonian, materialized as a
// dense 2^n x 2^n object. Test oracle only; n <= 12.
FullState zeno_full_reference(const FullState& psi0, const Matrix& h,
                              const SelectionBasis& basis, double t);

// Max-abs deviation between the projected full-space evolution and the lift
// of the reduced evolution; exactness means this stays at rounding level.
double verify_theorem1(const FullState& psi0, const Matrix& h,
                       const SelectionBasis& basis, double t);

struct VerificationReport {
  int cases = 0;
  double max_error = 0.0;
};

// Randomized projection-equivalence suite: constraint bases from random
// 3-SAT prefixes, Hamiltonians rotating through problem / mixer / random
// Hermitian, t in [0, 5], sizes up to n = 10.
VerificationReport verify_theorem1_randomized(int cases, std::uint64_t seed,
                                              int threads = 0);

}  // namespace qzeno
