#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qzeno/errors.hpp"

namespace qzeno {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

inline constexpr Complex kImagUnit{0.0, 1.0};

// Max |M[i][j] - conj(M[j][i])|.
double hermiticity_error(const Matrix& m);

// Max entry of |U†U - I|.
double unitarity_error(const Matrix& u);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& u, double tol = kUnitaryTol);

// exp(-i t H) for Hermitian H, via eigendecomposition H = V Λ V†.
// Throws NonHermitianInput when the Hermiticity check fails.
Matrix expm_hermitian(const Matrix& h, double t);

// Phases exp(-i t diag) of a diagonal Hamiltonian given as a real vector.
Vector expm_diagonal(const Eigen::VectorXd& diag, double t);

// M * v with an explicit dimension check.
Vector matvec(const Matrix& m, const Vector& v);

// Applies a 2x2 gate to the given qubit of a 2^n state vector. Qubit 0 is the
// least-significant bit of the basis index.
Vector apply_single_qubit_gate(const Vector& state, const Eigen::Matrix2cd& gate,
                               int qubit);

// True if dim is 2^n for some n >= 0; n returned through *n_out when non-null.
bool power_of_two_dim(Eigen::Index dim, int* n_out = nullptr);

}  // namespace qzeno
