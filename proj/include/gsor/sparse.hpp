#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gsor {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Symmetric sparse matrix in CSR form. Both triangles are stored explicitly.
//
// Invariants, checked on construction:
//  - column indices strictly increase within each row,
//  - no explicit zero values,
//  - exact symmetry: for every stored (i,j,v) the entry (j,i,v) is stored
//    with a bitwise-equal value.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  /// value * I. A zero value yields an empty (all-zero) matrix.
  static SparseMatrix identity(int n, double value = 1.0);

  /// Assemble from triplets. Duplicate (row, col) contributions are summed;
  /// entries that cancel to exactly zero are dropped. Contributions must be
  /// symmetric as a multiset or assembly fails.
  static SparseMatrix from_triplets(int n, std::span<const Triplet> entries);

  int size() const { return n_; }
  std::int64_t nonzeros() const { return static_cast<std::int64_t>(values_.size()); }

  /// Entry value, 0.0 when the position is not stored.
  double value_at(int i, int j) const;

  /// y = A*x
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> multiply(std::span<const double> x) const;

  const std::vector<std::int64_t>& row_start() const { return rowstart_; }
  const std::vector<int>& col_index() const { return colindex_; }
  const std::vector<double>& values() const { return values_; }

  std::vector<Triplet> to_triplets() const;

  /// Re-verify all class invariants; throws std::logic_error on violation.
  void check_invariants() const;

 private:
  static SparseMatrix from_csr_unchecked(int n, std::vector<std::int64_t> rowstart,
                                         std::vector<int> colindex, std::vector<double> values);

  int n_ = 0;
  std::vector<std::int64_t> rowstart_;  // n+1 offsets
  std::vector<int> colindex_;
  std::vector<double> values_;

  friend SparseMatrix add_scaled(const SparseMatrix&, const SparseMatrix&, double, double);
  friend SparseMatrix add_scaled_identity(const SparseMatrix&, double);
  friend SparseMatrix scaled(const SparseMatrix&, double);
  friend SparseMatrix tridiag(int, double);
};

/// scale * tridiag(-1, 2, -1) of order m (1-D Dirichlet Laplacian).
SparseMatrix tridiag(int m, double scale);

/// I (x) V + V (x) I for square symmetric V of order m; result has order m^2.
SparseMatrix kron_sum(const SparseMatrix& V);

/// A + sum of the given entrywise updates. The update list must be symmetric
/// (every off-diagonal (i,j,v) matched by (j,i,v)).
SparseMatrix add_rank_correction(const SparseMatrix& A, std::span<const Triplet> updates);

/// ca*A + cb*B. Entries that cancel exactly are dropped.
SparseMatrix add_scaled(const SparseMatrix& A, const SparseMatrix& B, double ca, double cb);

/// A + s*I.
SparseMatrix add_scaled_identity(const SparseMatrix& A, double s);

/// s*A.
SparseMatrix scaled(const SparseMatrix& A, double s);

}  // namespace gsor
