#include "qzeno/hamiltonians.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qzeno {

std::optional<int> SelectionBasis::position(std::uint64_t index) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), index);
  if (it == indices.end() || *it != index) return std::nullopt;
  return static_cast<int>(it - indices.begin());
}

SelectionBasis SelectionBasis::from_models(const ModelSet& models) {
  return SelectionBasis{models.n, models.models};
}

SelectionBasis SelectionBasis::full_space(int n) {
  SelectionBasis basis;
  basis.n = n;
  basis.indices.resize(1ULL << n);
  for (std::uint64_t x = 0; x < basis.indices.size(); ++x) basis.indices[x] = x;
  return basis;
}

Eigen::VectorXd hp_diagonal(const CnfFormula& f) {
  if (f.n > 24)
    throw TooLarge("hp_diagonal: refusing to materialize 2^" +
                   std::to_string(f.n) + " entries");
  Eigen::VectorXd diag(1LL << f.n);
  for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(diag.size()); ++x)
    diag[static_cast<Eigen::Index>(x)] = count_satisfied(f, x);
  return diag;
}

double hb_entry(std::uint64_t k, std::uint64_t l, int /*n*/) {
  return std::popcount(k ^ l) == 1 ? 1.0 : 0.0;
}

Complex ub_entry(std::uint64_t k, std::uint64_t l, int n, double delta) {
  const int h = std::popcount(k ^ l);
  const double mag =
      std::pow(std::cos(delta), n - h) * std::pow(std::sin(delta), h);
  // (-i)^h cycles with period four
  static const Complex cycle[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return mag * cycle[h % 4];
}

Eigen::MatrixXd hb_full(int n) {
  if (n > 14) throw TooLarge("hb_full: n = " + std::to_string(n) + " exceeds 14");
  const std::uint64_t dim = 1ULL << n;
  Eigen::MatrixXd hb = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint64_t k = 0; k < dim; ++k)
    for (int j = 0; j < n; ++j) hb(k, k ^ (1ULL << j)) = 1.0;
  return hb;
}

Matrix ub_full_matrix(int n, double delta) {
  if (n > 14)
    throw TooLarge("ub_full_matrix: n = " + std::to_string(n) + " exceeds 14");
  const std::uint64_t dim = 1ULL << n;
  Matrix ub(dim, dim);
  for (std::uint64_t k = 0; k < dim; ++k)
    for (std::uint64_t l = 0; l < dim; ++l) ub(k, l) = ub_entry(k, l, n, delta);
  return ub;
}

Vector apply_ub_full(const Vector& state, double delta) {
  int n = 0;
  if (!power_of_two_dim(state.size(), &n))
    throw DimensionMismatch("apply_ub_full: state dimension is not a power of two");
  Eigen::Matrix2cd gate;
  const Complex off = -kImagUnit * std::sin(delta);
  gate << std::cos(delta), off, off, std::cos(delta);
  Vector out = state;
  for (int q = 0; q < n; ++q) out = apply_single_qubit_gate(out, gate, q);
  return out;
}

ReducedOperators build_reduced(const CnfFormula& f_problem,
                               const SelectionBasis& basis, double delta) {
  if (basis.n != f_problem.n)
    throw BasisMismatch("build_reduced: basis over " + std::to_string(basis.n) +
                        " variables, formula over " + std::to_string(f_problem.n));
  const int d = basis.d();
  ReducedOperators ops;
  ops.delta = delta;
  ops.hp.resize(d);
  for (int a = 0; a < d; ++a)
    ops.hp[a] = count_satisfied(f_problem, basis.indices[a]);
  ops.hb = Eigen::MatrixXd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (std::popcount(basis.indices[a] ^ basis.indices[b]) == 1)
        ops.hb(a, b) = ops.hb(b, a) = 1.0;
  ops.up = expm_diagonal(ops.hp, delta);
  ops.ub = expm_hermitian(ops.hb.cast<Complex>(), delta);
  return ops;
}

}  // namespace qzeno
