#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qzeno/cnf.hpp"
#include "qzeno/linalg.hpp"
#include "qzeno/modelcount.hpp"

namespace qzeno {

// Strictly ascending computational-basis indices spanning the safe subspace.
// Plays the role of the selection matrix whose columns are those basis
// vectors; d = 0 (empty subspace) is legal.
struct SelectionBasis {
  int n = 0;
  std::vector<std::uint64_t> indices;

  int d() const { return static_cast<int>(indices.size()); }
  std::uint64_t full_dim() const { return 1ULL << n; }

  // Position of a basis index inside the selection, if selected.
  std::optional<int> position(std::uint64_t index) const;

  static SelectionBasis from_models(const ModelSet& models);
  static SelectionBasis full_space(int n);
};

// Reduced operator pair for one time step: the diagonal problem part, the
// Hamming-distance-1 mixer block, and their cached unitaries.
struct ReducedOperators {
  Eigen::VectorXd hp;  // clause counts at the selected indices
  Eigen::MatrixXd hb;  // 0/1 adjacency of Hamming-distance-1 pairs
  double delta = 0.0;
  Vector up;  // diagonal of exp(-i delta hp)
  Matrix ub;  // exp(-i delta hb), dense
};

// Diagonal entry <x|H_P|x>: the number of satisfied clauses.
inline int hp_entry(const CnfFormula& f, std::uint64_t x) {
  return count_satisfied(f, x);
}

// Full 2^n diagonal of H_P. Materialization guard n <= 24.
Eigen::VectorXd hp_diagonal(const CnfFormula& f);

// Mixer entry: 1 at Hamming distance one, else 0.
double hb_entry(std::uint64_t k, std::uint64_t l, int n);

// Closed-form mixer unitary entry (cos d)^(n-h) (-i sin d)^h with h the
// Hamming distance of k and l.
Complex ub_entry(std::uint64_t k, std::uint64_t l, int n, double delta);

// Materialized full-space mixer Hamiltonian / unitary; oracle-scale helpers.
Eigen::MatrixXd hb_full(int n);
Matrix ub_full_matrix(int n, double delta);

// One mixer step exp(-i delta H_B) applied qubit-by-qubit in O(n 2^n).
Vector apply_ub_full(const Vector& state, double delta);

// Reduced pair for the given constraint basis; cost O(d^2) entries plus one
// d x d eigendecomposition, never a 2^n x 2^n object.
ReducedOperators build_reduced(const CnfFormula& f_problem,
                               const SelectionBasis& basis, double delta);

}  // namespace qzeno
