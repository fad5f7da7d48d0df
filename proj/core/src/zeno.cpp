#include "qzeno/zeno.hpp"

#include <cmath>

#include "qzeno/parallel.hpp"
#include "qzeno/rng.hpp"

namespace qzeno {

FullState FullState::basis_state(int n, std::uint64_t index) {
  FullState psi;
  psi.n = n;
  psi.amplitudes = Vector::Zero(1LL << n);
  psi.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
  return psi;
}

ZenoSplit compress(const FullState& psi, const SelectionBasis& basis) {
  if (psi.n != basis.n || psi.amplitudes.size() != static_cast<Eigen::Index>(basis.full_dim()))
    throw DimensionMismatch("compress: state and basis dimensions differ");
  ZenoSplit split;
  split.reduced.basis = basis;
  split.reduced.amplitudes.resize(basis.d());
  split.residual.n = psi.n;
  split.residual.amplitudes = psi.amplitudes;
  for (int a = 0; a < basis.d(); ++a) {
    auto i = static_cast<Eigen::Index>(basis.indices[a]);
    split.reduced.amplitudes[a] = psi.amplitudes[i];
    split.residual.amplitudes[i] = 0.0;
  }
  return split;
}

FullState lift(const ZenoSplit& split) {
  const SelectionBasis& basis = split.reduced.basis;
  if (split.residual.n != basis.n)
    throw DimensionMismatch("lift: residual and basis dimensions differ");
  if (split.reduced.amplitudes.size() != basis.d())
    throw DimensionMismatch("lift: reduced amplitude count differs from basis");
  FullState out;
  out.n = basis.n;
  out.amplitudes = split.residual.amplitudes;
  for (int a = 0; a < basis.d(); ++a)
    out.amplitudes[static_cast<Eigen::Index>(basis.indices[a])] +=
        split.reduced.amplitudes[a];
  return out;
}

ReducedState evolve_reduced(const ReducedState& state, const Matrix& u,
                            int repetitions) {
  if (u.rows() != u.cols() || u.cols() != state.amplitudes.size())
    throw DimensionMismatch("evolve_reduced: unitary does not match state");
  ReducedState out = state;
  for (int r = 0; r < repetitions; ++r) out.amplitudes = u * out.amplitudes;
  return out;
}

FullState zeno_full_reference(const FullState& psi0, const Matrix& h,
                              const SelectionBasis& basis, double t) {
  if (psi0.n > 12)
    throw TooLarge("zeno_full_reference: n = " + std::to_string(psi0.n) +
                   " exceeds the oracle guard of 12");
  if (h.rows() != psi0.amplitudes.size() || h.cols() != h.rows())
    throw DimensionMismatch("zeno_full_reference: Hamiltonian dimension mismatch");
  if (basis.n != psi0.n)
    throw DimensionMismatch("zeno_full_reference: basis dimension mismatch");

  const Eigen::Index dim = h.rows();
  // P_Z is diagonal 0/1 for a standard-basis selection, so P_Z H P_Z keeps
  // exactly the selected rows and columns.
  Eigen::VectorXd mask = Eigen::VectorXd::Zero(dim);
  for (std::uint64_t idx : basis.indices) mask[static_cast<Eigen::Index>(idx)] = 1.0;
  Matrix hz = mask.asDiagonal() * h * mask.asDiagonal();
  FullState out;
  out.n = psi0.n;
  out.amplitudes = expm_hermitian(hz, t) * psi0.amplitudes;
  return out;
}

double verify_theorem1(const FullState& psi0, const Matrix& h,
                       const SelectionBasis& basis, double t) {
  FullState full = zeno_full_reference(psi0, h, basis, t);

  ZenoSplit split = compress(psi0, basis);
  Matrix h_reduced(basis.d(), basis.d());
  for (int a = 0; a < basis.d(); ++a)
    for (int b = 0; b < basis.d(); ++b)
      h_reduced(a, b) = h(static_cast<Eigen::Index>(basis.indices[a]),
                          static_cast<Eigen::Index>(basis.indices[b]));
  ZenoSplit evolved{evolve_reduced(split.reduced, expm_hermitian(h_reduced, t), 1),
                    split.residual};
  return (full.amplitudes - lift(evolved).amplitudes).cwiseAbs().maxCoeff();
}

namespace {

FullState random_state(int n, Rng& rng) {
  FullState psi;
  psi.n = n;
  psi.amplitudes.resize(1LL << n);
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i)
    psi.amplitudes[i] = Complex(rng.real(-1, 1), rng.real(-1, 1));
  psi.amplitudes.normalize();
  return psi;
}

Matrix random_hermitian(Eigen::Index dim, Rng& rng) {
  Matrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      a(i, j) = Complex(rng.real(-1, 1), rng.real(-1, 1));
  return (a + a.adjoint()) / 2.0;
}

// Sizes weighted toward the small end; the large ones dominate the dense
// eigendecomposition cost.
int draw_case_size(Rng& rng) {
  static const int sizes[16] = {3, 3, 3, 4, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 10};
  return sizes[rng.below(16)];
}

}  // namespace

VerificationReport verify_theorem1_randomized(int cases, std::uint64_t seed,
                                              int threads) {
  std::vector<double> errors(cases, 0.0);
  parallel_for_indexed(
      cases,
      [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        const int n = draw_case_size(rng);
        const int m = rng.range(2, 4 * n);
        CnfFormula f = random_3sat(n, m, rng.next());
        const int k = rng.range(0, m);
        SelectionBasis basis =
            SelectionBasis::from_models(enumerate_models_dpll(prefix(f, k)));
        FullState psi0 = random_state(n, rng);
        const double t = rng.real(0.0, 5.0);
        Matrix h;
        switch (i % 3) {
          case 0:
            h = hp_diagonal(f).cast<Complex>().asDiagonal();
            break;
          case 1:
            h = hb_full(n).cast<Complex>();
            break;
          default:
            h = random_hermitian(1LL << n, rng);
        }
        errors[i] = verify_theorem1(psi0, h, basis, t);
      },
      threads);
  VerificationReport report;
  report.cases = cases;
  for (double e : errors) report.max_error = std::max(report.max_error, e);
  return report;
}

}  // namespace qzeno
