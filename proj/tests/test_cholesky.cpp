#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "gsor/cholesky.hpp"
#include "gsor/dense.hpp"
#include "gsor/problems.hpp"
#include "gsor/sparse.hpp"
#include "gsor/verify.hpp"

using gsor::SparseMatrix;

namespace {

double residual_inf(const SparseMatrix& A, const std::vector<double>& x,
                    const std::vector<double>& b) {
  const std::vector<double> ax = A.multiply(x);
  double worst = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    worst = std::max(worst, std::abs(ax[i] - b[i]));
  return worst;
}

}  // namespace

TEST_SUITE("cholesky") {

TEST_CASE("solves a tridiagonal system") {
  const SparseMatrix A = gsor::tridiag(8, 2.0);
  std::vector<double> b(8);
  for (std::size_t i = 0; i < 8; ++i) b[i] = static_cast<double>(i) - 3.0;
  const std::vector<double> x = gsor::spd_solve(A, b);
  CHECK(residual_inf(A, x, b) <= 1e-12);
}

TEST_CASE("matches dense LU on a random SPD matrix") {
  std::mt19937_64 eng(404);
  const SparseMatrix A = gsor::verify::random_spd(20, eng);
  std::vector<double> b(20);
  for (std::size_t i = 0; i < 20; ++i) b[i] = std::sin(1.0 + static_cast<double>(i));

  const std::vector<double> x = gsor::spd_solve(A, b);
  const std::vector<double> y = gsor::dense::lu_solve(gsor::dense::from_sparse(A), b);
  for (std::size_t i = 0; i < 20; ++i) CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-10));
}

TEST_CASE("solve accepts aliased input and output") {
  const SparseMatrix A = gsor::tridiag(6, 3.0);
  const gsor::SpdFactorization F = gsor::factorize_spd(A);
  std::vector<double> rhs = {1.0, 0.0, -2.0, 4.0, 0.5, 1.0};
  const std::vector<double> expect = F.solve(rhs);
  F.solve(rhs, rhs);
  CHECK(rhs == expect);
}

TEST_CASE("rejects indefinite matrices") {
  const std::vector<gsor::Triplet> trips = {{0, 0, 1.0}, {0, 1, 2.0}, {1, 0, 2.0}, {1, 1, 1.0}};
  const SparseMatrix A = SparseMatrix::from_triplets(2, trips);
  CHECK_THROWS_AS(gsor::factorize_spd(A), gsor::NotPositiveDefiniteError);
  try {
    gsor::factorize_spd(A);
  } catch (const gsor::NotPositiveDefiniteError& e) {
    CHECK(e.row() == 1);
    CHECK(std::string(e.what()).find("pivot") != std::string::npos);
  }
}

TEST_CASE("rejects the all-zero matrix") {
  CHECK_THROWS_AS(gsor::factorize_spd(SparseMatrix::identity(3, 0.0)),
                  gsor::NotPositiveDefiniteError);
}

TEST_CASE("handles the bordered generator matrix without reordering") {
  const SparseMatrix W = gsor::gen_example3(4).W;
  std::vector<double> b(static_cast<std::size_t>(W.size()), 1.0);
  const std::vector<double> x = gsor::spd_solve(W, b);
  CHECK(residual_inf(W, x, b) <= 1e-10);
}

TEST_CASE("free solve helper matches the member") {
  const SparseMatrix A = gsor::tridiag(5, 1.5);
  const gsor::SpdFactorization F = gsor::factorize_spd(A);
  const std::vector<double> rhs = {2.0, -1.0, 0.0, 1.0, 3.0};
  CHECK(gsor::solve(F, rhs) == F.solve(rhs));
}

}  // TEST_SUITE
