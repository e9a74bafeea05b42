#include "gsor/sparse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gsor/kernels.hpp"

namespace gsor {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Sort key that makes duplicate summation order canonical: contributions to a
// cell are added in bit-pattern order, so mirrored cells with an identical
// value multiset sum to bitwise-equal results.
inline std::uint64_t value_bits(double v) { return std::bit_cast<std::uint64_t>(v); }

}  // namespace

SparseMatrix SparseMatrix::from_csr_unchecked(int n, std::vector<std::int64_t> rowstart,
                                              std::vector<int> colindex,
                                              std::vector<double> values) {
  SparseMatrix a;
  a.n_ = n;
  a.rowstart_ = std::move(rowstart);
  a.colindex_ = std::move(colindex);
  a.values_ = std::move(values);
  return a;
}

SparseMatrix SparseMatrix::identity(int n, double value) {
  require(n >= 1, "identity: dimension must be positive");
  require(std::isfinite(value), "identity: value must be finite");
  SparseMatrix a;
  a.n_ = n;
  a.rowstart_.assign(static_cast<std::size_t>(n) + 1, 0);
  if (value != 0.0) {
    a.colindex_.resize(static_cast<std::size_t>(n));
    a.values_.assign(static_cast<std::size_t>(n), value);
    for (int i = 0; i < n; ++i) {
      a.colindex_[static_cast<std::size_t>(i)] = i;
      a.rowstart_[static_cast<std::size_t>(i) + 1] = i + 1;
    }
  }
  return a;
}

SparseMatrix SparseMatrix::from_triplets(int n, std::span<const Triplet> entries) {
  require(n >= 1, "from_triplets: dimension must be positive");
  for (const Triplet& t : entries) {
    require(t.row >= 0 && t.row < n && t.col >= 0 && t.col < n,
            "from_triplets: index out of range at (" + std::to_string(t.row) + ", " +
                std::to_string(t.col) + ")");
    require(std::isfinite(t.value), "from_triplets: non-finite value at (" +
                                        std::to_string(t.row) + ", " + std::to_string(t.col) + ")");
  }

  std::vector<Triplet> work(entries.begin(), entries.end());
  std::sort(work.begin(), work.end(), [](const Triplet& a, const Triplet& b) {
    if (a.row != b.row) return a.row < b.row;
    if (a.col != b.col) return a.col < b.col;
    return value_bits(a.value) < value_bits(b.value);
  });

  SparseMatrix a;
  a.n_ = n;
  a.rowstart_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::size_t i = 0;
  while (i < work.size()) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < work.size() && work[j].row == work[i].row && work[j].col == work[i].col)
      sum += work[j++].value;
    if (sum != 0.0) {
      a.colindex_.push_back(work[i].col);
      a.values_.push_back(sum);
      a.rowstart_[static_cast<std::size_t>(work[i].row) + 1]++;
    }
    i = j;
  }
  for (int r = 0; r < n; ++r)
    a.rowstart_[static_cast<std::size_t>(r) + 1] += a.rowstart_[static_cast<std::size_t>(r)];

  // symmetry: each stored (i,j,v) needs a bitwise-equal (j,i,v)
  for (int r = 0; r < n; ++r) {
    for (std::int64_t k = a.rowstart_[r]; k < a.rowstart_[r + 1]; ++k) {
      const int c = a.colindex_[static_cast<std::size_t>(k)];
      const double v = a.values_[static_cast<std::size_t>(k)];
      if (a.value_at(c, r) != v)
        throw std::invalid_argument("from_triplets: assembled matrix is not symmetric at (" +
                                    std::to_string(r) + ", " + std::to_string(c) + ")");
    }
  }
  return a;
}

double SparseMatrix::value_at(int i, int j) const {
  require(i >= 0 && i < n_ && j >= 0 && j < n_, "value_at: index out of range");
  const auto lo = colindex_.begin() + static_cast<std::ptrdiff_t>(rowstart_[i]);
  const auto hi = colindex_.begin() + static_cast<std::ptrdiff_t>(rowstart_[i + 1]);
  const auto it = std::lower_bound(lo, hi, j);
  if (it == hi || *it != j) return 0.0;
  return values_[static_cast<std::size_t>(it - colindex_.begin())];
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  require(static_cast<int>(x.size()) == n_ && static_cast<int>(y.size()) == n_,
          "multiply: dimension mismatch");
  kernels::spmv(n_, rowstart_.data(), colindex_.data(), values_.data(), x.data(), y.data());
}

std::vector<double> SparseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(static_cast<std::size_t>(n_));
  multiply(x, y);
  return y;
}

std::vector<Triplet> SparseMatrix::to_triplets() const {
  std::vector<Triplet> out;
  out.reserve(values_.size());
  for (int r = 0; r < n_; ++r)
    for (std::int64_t k = rowstart_[r]; k < rowstart_[r + 1]; ++k)
      out.push_back({r, colindex_[static_cast<std::size_t>(k)], values_[static_cast<std::size_t>(k)]});
  return out;
}

void SparseMatrix::check_invariants() const {
  auto fail = [](const std::string& msg) { throw std::logic_error("SparseMatrix: " + msg); };
  if (n_ < 0) fail("negative dimension");
  if (rowstart_.size() != static_cast<std::size_t>(n_) + 1) fail("bad rowstart length");
  if (rowstart_.front() != 0 || rowstart_.back() != nonzeros()) fail("bad rowstart bounds");
  if (colindex_.size() != values_.size()) fail("index/value length mismatch");
  for (int r = 0; r < n_; ++r) {
    if (rowstart_[r] > rowstart_[r + 1]) fail("rowstart not monotone");
    for (std::int64_t k = rowstart_[r]; k < rowstart_[r + 1]; ++k) {
      const int c = colindex_[static_cast<std::size_t>(k)];
      if (c < 0 || c >= n_) fail("column out of range");
      if (k > rowstart_[r] && colindex_[static_cast<std::size_t>(k - 1)] >= c)
        fail("columns not strictly increasing");
      const double v = values_[static_cast<std::size_t>(k)];
      if (v == 0.0) fail("explicit zero stored");
      if (!std::isfinite(v)) fail("non-finite value stored");
      if (value_at(c, r) != v) fail("symmetry violated");
    }
  }
}

SparseMatrix tridiag(int m, double scale) {
  require(m >= 1, "tridiag: dimension must be positive");
  require(std::isfinite(scale) && scale > 0.0, "tridiag: scale must be positive");
  std::vector<std::int64_t> rowstart(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> colindex;
  std::vector<double> values;
  colindex.reserve(3 * static_cast<std::size_t>(m));
  values.reserve(3 * static_cast<std::size_t>(m));
  const double d = 2.0 * scale;
  const double o = -scale;
  for (int i = 0; i < m; ++i) {
    if (i > 0) {
      colindex.push_back(i - 1);
      values.push_back(o);
    }
    colindex.push_back(i);
    values.push_back(d);
    if (i + 1 < m) {
      colindex.push_back(i + 1);
      values.push_back(o);
    }
    rowstart[static_cast<std::size_t>(i) + 1] = static_cast<std::int64_t>(colindex.size());
  }
  return SparseMatrix::from_csr_unchecked(m, std::move(rowstart), std::move(colindex),
                                          std::move(values));
}

SparseMatrix kron_sum(const SparseMatrix& V) {
  const int m = V.size();
  require(m >= 1, "kron_sum: empty operand");
  const std::int64_t n64 = static_cast<std::int64_t>(m) * m;
  require(n64 <= 1 << 30, "kron_sum: result dimension too large");
  const int n = static_cast<int>(n64);

  std::vector<Triplet> trips;
  trips.reserve(2 * static_cast<std::size_t>(m) * static_cast<std::size_t>(V.nonzeros()));
  const auto vt = V.to_triplets();
  // I (x) V: m diagonal blocks of V
  for (int b = 0; b < m; ++b)
    for (const Triplet& t : vt) trips.push_back({b * m + t.row, b * m + t.col, t.value});
  // V (x) I: entry (i,j) of V becomes a diagonal block scaled copy
  for (const Triplet& t : vt)
    for (int k = 0; k < m; ++k) trips.push_back({t.row * m + k, t.col * m + k, t.value});
  return SparseMatrix::from_triplets(n, trips);
}

SparseMatrix add_rank_correction(const SparseMatrix& A, std::span<const Triplet> updates) {
  const int n = A.size();
  for (const Triplet& t : updates)
    require(t.row >= 0 && t.row < n && t.col >= 0 && t.col < n,
            "add_rank_correction: update index out of range");

  // the update multiset must be symmetric
  std::vector<Triplet> given(updates.begin(), updates.end());
  std::vector<Triplet> mirrored(given.size());
  std::transform(given.begin(), given.end(), mirrored.begin(),
                 [](const Triplet& t) { return Triplet{t.col, t.row, t.value}; });
  auto key = [](const Triplet& a, const Triplet& b) {
    if (a.row != b.row) return a.row < b.row;
    if (a.col != b.col) return a.col < b.col;
    return value_bits(a.value) < value_bits(b.value);
  };
  std::sort(given.begin(), given.end(), key);
  std::sort(mirrored.begin(), mirrored.end(), key);
  for (std::size_t i = 0; i < given.size(); ++i)
    if (given[i].row != mirrored[i].row || given[i].col != mirrored[i].col ||
        given[i].value != mirrored[i].value)
      throw std::invalid_argument("add_rank_correction: update list is not symmetric");

  std::vector<Triplet> trips = A.to_triplets();
  trips.insert(trips.end(), updates.begin(), updates.end());
  return SparseMatrix::from_triplets(n, trips);
}

SparseMatrix add_scaled(const SparseMatrix& A, const SparseMatrix& B, double ca, double cb) {
  require(A.size() == B.size(), "add_scaled: dimension mismatch");
  require(std::isfinite(ca) && std::isfinite(cb), "add_scaled: coefficients must be finite");
  const int n = A.size();
  std::vector<std::int64_t> rowstart(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> colindex;
  std::vector<double> values;
  colindex.reserve(static_cast<std::size_t>(A.nonzeros() + B.nonzeros()));
  values.reserve(static_cast<std::size_t>(A.nonzeros() + B.nonzeros()));
  for (int r = 0; r < n; ++r) {
    std::int64_t ia = A.rowstart_[r];
    std::int64_t ib = B.rowstart_[r];
    const std::int64_t ea = A.rowstart_[r + 1];
    const std::int64_t eb = B.rowstart_[r + 1];
    while (ia < ea || ib < eb) {
      int col;
      double v;
      if (ib >= eb || (ia < ea && A.colindex_[static_cast<std::size_t>(ia)] <
                                      B.colindex_[static_cast<std::size_t>(ib)])) {
        col = A.colindex_[static_cast<std::size_t>(ia)];
        v = ca * A.values_[static_cast<std::size_t>(ia)];
        ++ia;
      } else if (ia >= ea || B.colindex_[static_cast<std::size_t>(ib)] <
                                 A.colindex_[static_cast<std::size_t>(ia)]) {
        col = B.colindex_[static_cast<std::size_t>(ib)];
        v = cb * B.values_[static_cast<std::size_t>(ib)];
        ++ib;
      } else {
        col = A.colindex_[static_cast<std::size_t>(ia)];
        v = ca * A.values_[static_cast<std::size_t>(ia)] +
            cb * B.values_[static_cast<std::size_t>(ib)];
        ++ia;
        ++ib;
      }
      if (v != 0.0) {
        colindex.push_back(col);
        values.push_back(v);
      }
    }
    rowstart[static_cast<std::size_t>(r) + 1] = static_cast<std::int64_t>(colindex.size());
  }
  return SparseMatrix::from_csr_unchecked(n, std::move(rowstart), std::move(colindex),
                                          std::move(values));
}

SparseMatrix add_scaled_identity(const SparseMatrix& A, double s) {
  return add_scaled(A, SparseMatrix::identity(A.size()), 1.0, s);
}

SparseMatrix scaled(const SparseMatrix& A, double s) {
  require(std::isfinite(s), "scaled: factor must be finite");
  const int n = A.size();
  std::vector<std::int64_t> rowstart(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> colindex;
  std::vector<double> values;
  colindex.reserve(static_cast<std::size_t>(A.nonzeros()));
  values.reserve(static_cast<std::size_t>(A.nonzeros()));
  for (int r = 0; r < n; ++r) {
    for (std::int64_t k = A.rowstart_[r]; k < A.rowstart_[r + 1]; ++k) {
      const double v = s * A.values_[static_cast<std::size_t>(k)];
      if (v != 0.0) {
        colindex.push_back(A.colindex_[static_cast<std::size_t>(k)]);
        values.push_back(v);
      }
    }
    rowstart[static_cast<std::size_t>(r) + 1] = static_cast<std::int64_t>(colindex.size());
  }
  return SparseMatrix::from_csr_unchecked(n, std::move(rowstart), std::move(colindex),
                                          std::move(values));
}

}  // namespace gsor
