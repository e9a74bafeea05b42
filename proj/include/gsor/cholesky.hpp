#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsor/sparse.hpp"

namespace gsor {

class NotPositiveDefiniteError : public std::runtime_error {
 public:
  NotPositiveDefiniteError(const std::string& what, int row)
      : std::runtime_error(what), row_(row) {}
  int row() const { return row_; }

 private:
  int row_;
};

// Envelope (profile) Cholesky factorization A = L*L^T. Each row of L is
// stored densely from its first nonzero column through the diagonal, so all
// fill stays inside the envelope and no reordering is needed for the banded
// and bordered matrices produced by the problem generators.
class SpdFactorization {
 public:
  int size() const { return n_; }

  /// out = A^{-1} rhs; out may alias rhs.
  void solve(std::span<const double> rhs, std::span<double> out) const;
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  friend SpdFactorization factorize_spd(const SparseMatrix& A);

  int n_ = 0;
  std::vector<int> first_;           // first stored column of each row
  std::vector<std::int64_t> start_;  // row i occupies vals_[start_[i], start_[i+1])
  std::vector<double> vals_;         // row segments, diagonal entry last
};

/// Factor a symmetric positive definite matrix. Throws
/// NotPositiveDefiniteError when a pivot falls below 1e-14 * ||A||_inf.
SpdFactorization factorize_spd(const SparseMatrix& A);

std::vector<double> solve(const SpdFactorization& f, std::span<const double> rhs);

/// One-shot convenience: factorize A and solve a single system.
std::vector<double> spd_solve(const SparseMatrix& A, std::span<const double> rhs);

}  // namespace gsor
