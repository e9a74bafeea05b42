#include "gsor/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsor::dense {

Matrix from_sparse(const SparseMatrix& A) {
  Matrix d(A.size());
  for (const Triplet& t : A.to_triplets()) d.at(t.row, t.col) = t.value;
  return d;
}

std::vector<double> lu_solve(Matrix A, std::vector<double> b) {
  const int n = A.n;
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("lu_solve: size mismatch");
  std::vector<int> piv(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A.at(i, k)) > std::abs(A.at(p, k))) p = i;
    if (std::abs(A.at(p, k)) < 1e-300) throw std::runtime_error("lu_solve: singular matrix");
    piv[static_cast<std::size_t>(k)] = p;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
      std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(p)]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = A.at(i, k) / A.at(k, k);
      A.at(i, k) = f;
      for (int j = k + 1; j < n; ++j) A.at(i, j) -= f * A.at(k, j);
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= A.at(i, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(i)] = s / A.at(i, i);
  }
  return b;
}

std::vector<double> eigenvalues_sym(Matrix A) {
  const int n = A.n;
  if (n == 0) return {};
  double frob = 0.0;
  for (double v : A.a) frob += v * v;
  const double stop = 1e-28 * std::max(frob, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += A.at(i, j) * A.at(i, j);
    if (off <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A.at(p, q);
        if (apq == 0.0) continue;
        const double theta = (A.at(q, q) - A.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A.at(k, p);
          const double akq = A.at(k, q);
          A.at(k, p) = c * akp - s * akq;
          A.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A.at(p, k);
          const double aqk = A.at(q, k);
          A.at(p, k) = c * apk - s * aqk;
          A.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = A.at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

namespace {

// dense lower Cholesky; throws when B is not positive definite
Matrix cholesky(const Matrix& B) {
  const int n = B.n;
  Matrix L(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = B.at(i, j);
      for (int k = 0; k < j; ++k) s -= L.at(i, k) * L.at(j, k);
      if (i == j) {
        if (!(s > 0.0)) throw std::invalid_argument("eigenvalues_pencil: B is not positive definite");
        L.at(i, i) = std::sqrt(s);
      } else {
        L.at(i, j) = s / L.at(j, j);
      }
    }
  }
  return L;
}

}  // namespace

std::vector<double> eigenvalues_pencil(const Matrix& A, const Matrix& B) {
  if (A.n != B.n) throw std::invalid_argument("eigenvalues_pencil: size mismatch");
  const int n = A.n;
  const Matrix L = cholesky(B);

  // C = L^{-1} A L^{-T}: forward-solve columns twice, transposing in between
  Matrix Y(n);  // Y = L^{-1} A
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double s = A.at(i, j);
      for (int k = 0; k < i; ++k) s -= L.at(i, k) * Y.at(k, j);
      Y.at(i, j) = s / L.at(i, i);
    }
  }
  Matrix C(n);  // C^T = L^{-1} Y^T, i.e. C = Y L^{-T}
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double s = Y.at(j, i);
      for (int k = 0; k < i; ++k) s -= L.at(i, k) * C.at(j, k);
      C.at(j, i) = s / L.at(i, i);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (C.at(i, j) + C.at(j, i));
      C.at(i, j) = v;
      C.at(j, i) = v;
    }
  return eigenvalues_sym(C);
}

double spectral_radius_pencil(const Matrix& A, const Matrix& B) {
  const auto eig = eigenvalues_pencil(A, B);
  double r = 0.0;
  for (double v : eig) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace gsor::dense
