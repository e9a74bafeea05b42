#include "gsor/cholesky.hpp"

#include <algorithm>
#include <cmath>

namespace gsor {

namespace {

constexpr double kPivotRel = 1e-14;

double inf_norm(const SparseMatrix& A) {
  const auto& rs = A.row_start();
  const auto& v = A.values();
  double best = 0.0;
  for (int i = 0; i < A.size(); ++i) {
    double s = 0.0;
    for (std::int64_t k = rs[i]; k < rs[i + 1]; ++k) s += std::abs(v[static_cast<std::size_t>(k)]);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

SpdFactorization factorize_spd(const SparseMatrix& A) {
  const int n = A.size();
  if (n < 1) throw std::invalid_argument("factorize_spd: empty matrix");

  SpdFactorization f;
  f.n_ = n;
  f.first_.assign(static_cast<std::size_t>(n), 0);
  f.start_.assign(static_cast<std::size_t>(n) + 1, 0);

  const auto& rs = A.row_start();
  const auto& ci = A.col_index();
  const auto& av = A.values();

  for (int i = 0; i < n; ++i) {
    int first = i;
    if (rs[i] < rs[i + 1]) first = std::min(first, ci[static_cast<std::size_t>(rs[i])]);
    f.first_[static_cast<std::size_t>(i)] = first;
    f.start_[static_cast<std::size_t>(i) + 1] =
        f.start_[static_cast<std::size_t>(i)] + (i - first + 1);
  }
  f.vals_.assign(static_cast<std::size_t>(f.start_[static_cast<std::size_t>(n)]), 0.0);

  // scatter the lower triangle of A into the envelope
  for (int i = 0; i < n; ++i) {
    const int fi = f.first_[static_cast<std::size_t>(i)];
    for (std::int64_t k = rs[i]; k < rs[i + 1]; ++k) {
      const int j = ci[static_cast<std::size_t>(k)];
      if (j > i) break;
      f.vals_[static_cast<std::size_t>(f.start_[static_cast<std::size_t>(i)] + (j - fi))] =
          av[static_cast<std::size_t>(k)];
    }
  }

  const double tol = kPivotRel * inf_norm(A);
  double* vals = f.vals_.data();

  for (int i = 0; i < n; ++i) {
    const int fi = f.first_[static_cast<std::size_t>(i)];
    double* Li = vals + f.start_[static_cast<std::size_t>(i)];
    for (int j = fi; j < i; ++j) {
      const int fj = f.first_[static_cast<std::size_t>(j)];
      const double* Lj = vals + f.start_[static_cast<std::size_t>(j)];
      const int k0 = std::max(fi, fj);
      double s = Li[j - fi];
      const double* a = Li + (k0 - fi);
      const double* b = Lj + (k0 - fj);
      for (int k = 0; k < j - k0; ++k) s -= a[k] * b[k];
      Li[j - fi] = s / Lj[j - fj];  // divide by L(j,j)
    }
    double d = Li[i - fi];
    for (int k = fi; k < i; ++k) d -= Li[k - fi] * Li[k - fi];
    if (!(d > tol))
      throw NotPositiveDefiniteError(
          "matrix is not positive definite: pivot " + std::to_string(d) + " at row " +
              std::to_string(i) + " (threshold " + std::to_string(tol) + ")",
          i);
    Li[i - fi] = std::sqrt(d);
  }
  return f;
}

void SpdFactorization::solve(std::span<const double> rhs, std::span<double> out) const {
  if (static_cast<int>(rhs.size()) != n_ || static_cast<int>(out.size()) != n_)
    throw std::invalid_argument("solve: dimension mismatch");
  if (out.data() != rhs.data()) std::copy(rhs.begin(), rhs.end(), out.begin());
  double* x = out.data();
  const double* vals = vals_.data();

  // forward: L y = rhs
  for (int i = 0; i < n_; ++i) {
    const int fi = first_[static_cast<std::size_t>(i)];
    const double* Li = vals + start_[static_cast<std::size_t>(i)];
    double s = x[i];
    for (int k = fi; k < i; ++k) s -= Li[k - fi] * x[k];
    x[i] = s / Li[i - fi];
  }
  // backward: L^T x = y, row-oriented saxpy form
  for (int i = n_ - 1; i >= 0; --i) {
    const int fi = first_[static_cast<std::size_t>(i)];
    const double* Li = vals + start_[static_cast<std::size_t>(i)];
    x[i] /= Li[i - fi];
    const double xi = x[i];
    for (int k = fi; k < i; ++k) x[k] -= Li[k - fi] * xi;
  }
}

std::vector<double> SpdFactorization::solve(std::span<const double> rhs) const {
  std::vector<double> out(rhs.size());
  solve(rhs, out);
  return out;
}

std::vector<double> solve(const SpdFactorization& f, std::span<const double> rhs) {
  return f.solve(rhs);
}

std::vector<double> spd_solve(const SparseMatrix& A, std::span<const double> rhs) {
  return factorize_spd(A).solve(rhs);
}

}  // namespace gsor
