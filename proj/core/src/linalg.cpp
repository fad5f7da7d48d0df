#include "qzeno/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace qzeno {

double hermiticity_error(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  if (u.rows() == 0) return 0.0;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.rows() == 0) return true;
  return hermiticity_error(m) <= tol;
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return unitarity_error(u) <= tol;
}

Matrix expm_hermitian(const Matrix& h, double t) {
  if (h.rows() != h.cols())
    throw NonHermitianInput("expm_hermitian: matrix is not square");
  if (h.rows() == 0) return Matrix(0, 0);
  if (!is_hermitian(h))
    throw NonHermitianInput("expm_hermitian: input fails Hermiticity check");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases =
      (-kImagUnit * t * es.eigenvalues().array().cast<Complex>()).exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Vector expm_diagonal(const Eigen::VectorXd& diag, double t) {
  return (-kImagUnit * t * diag.array().cast<Complex>()).exp();
}

Vector matvec(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size())
    throw DimensionMismatch("matvec: " + std::to_string(m.cols()) + " columns vs vector of size " +
                            std::to_string(v.size()));
  return m * v;
}

bool power_of_two_dim(Eigen::Index dim, int* n_out) {
  if (dim < 1) return false;
  auto u = static_cast<std::uint64_t>(dim);
  if ((u & (u - 1)) != 0) return false;
  if (n_out) {
    int n = 0;
    while ((1ULL << n) < u) ++n;
    *n_out = n;
  }
  return true;
}

Vector apply_single_qubit_gate(const Vector& state, const Eigen::Matrix2cd& gate,
                               int qubit) {
  int n = 0;
  if (!power_of_two_dim(state.size(), &n))
    throw DimensionMismatch("apply_single_qubit_gate: state dimension " +
                            std::to_string(state.size()) + " is not a power of two");
  if (qubit < 0 || qubit >= n)
    throw QubitOutOfRange("apply_single_qubit_gate: qubit " + std::to_string(qubit) +
                          " outside [0, " + std::to_string(n) + ")");

  Vector out(state.size());
  const std::uint64_t step = 1ULL << qubit;
  const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
  for (std::uint64_t base = 0; base < dim; base += 2 * step) {
    for (std::uint64_t off = 0; off < step; ++off) {
      const std::uint64_t i0 = base + off;
      const std::uint64_t i1 = i0 + step;
      const Complex a0 = state[static_cast<Eigen::Index>(i0)];
      const Complex a1 = state[static_cast<Eigen::Index>(i1)];
      out[static_cast<Eigen::Index>(i0)] = gate(0, 0) * a0 + gate(0, 1) * a1;
      out[static_cast<Eigen::Index>(i1)] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
  }
  return out;
}

}  // namespace qzeno
