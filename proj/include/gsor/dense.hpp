#pragma once

#include <vector>

#include "gsor/sparse.hpp"

// Small dense routines used as independent oracles by the verification
// properties and tests. Not meant for large n.
namespace gsor::dense {

struct Matrix {
  int n = 0;
  std::vector<double> a;  // row major

  Matrix() = default;
  explicit Matrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

Matrix from_sparse(const SparseMatrix& A);

/// Solve A x = b by LU with partial pivoting; throws on (near) singularity.
std::vector<double> lu_solve(Matrix A, std::vector<double> b);

/// Eigenvalues of a symmetric matrix (cyclic Jacobi), ascending.
std::vector<double> eigenvalues_sym(Matrix A);

/// Eigenvalues of B^{-1} A with A symmetric and B symmetric positive
/// definite, ascending. Computed via the Cholesky congruence L^{-1} A L^{-T}.
std::vector<double> eigenvalues_pencil(const Matrix& A, const Matrix& B);

/// max |eig(B^{-1} A)| for symmetric A, SPD B.
double spectral_radius_pencil(const Matrix& A, const Matrix& B);

}  // namespace gsor::dense
