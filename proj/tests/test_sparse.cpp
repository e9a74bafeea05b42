#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gsor/sparse.hpp"

using gsor::SparseMatrix;
using gsor::Triplet;

TEST_SUITE("sparse") {

TEST_CASE("tridiag layout") {
  const SparseMatrix A = gsor::tridiag(3, 1.0);
  CHECK(A.size() == 3);
  CHECK(A.nonzeros() == 7);
  CHECK(A.value_at(0, 0) == 2.0);
  CHECK(A.value_at(1, 0) == -1.0);
  CHECK(A.value_at(0, 2) == 0.0);
  CHECK_NOTHROW(A.check_invariants());

  const SparseMatrix B = gsor::tridiag(4, 2.5);
  CHECK(B.value_at(2, 2) == 5.0);
  CHECK(B.value_at(2, 3) == -2.5);

  CHECK_THROWS_AS(gsor::tridiag(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gsor::tridiag(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gsor::tridiag(3, -2.0), std::invalid_argument);
}

TEST_CASE("identity") {
  const SparseMatrix I = SparseMatrix::identity(4, 2.5);
  CHECK(I.nonzeros() == 4);
  CHECK(I.value_at(3, 3) == 2.5);
  CHECK(I.value_at(0, 1) == 0.0);

  const SparseMatrix Z = SparseMatrix::identity(3, 0.0);
  CHECK(Z.nonzeros() == 0);
  const std::vector<double> x = {1.0, 2.0, 3.0};
  CHECK(Z.multiply(x) == std::vector<double>{0.0, 0.0, 0.0});

  CHECK_THROWS_AS(SparseMatrix::identity(0), std::invalid_argument);
}

TEST_CASE("from_triplets sums duplicates and drops exact cancellations") {
  const std::vector<Triplet> trips = {
      {0, 0, 1.0}, {1, 1, 1.0}, {0, 1, 0.5}, {1, 0, 0.5}, {0, 1, 0.25}, {1, 0, 0.25},
  };
  const SparseMatrix A = SparseMatrix::from_triplets(2, trips);
  CHECK(A.nonzeros() == 4);
  CHECK(A.value_at(0, 1) == 0.75);
  CHECK(A.value_at(1, 0) == 0.75);

  const std::vector<Triplet> cancel = {
      {0, 0, 2.0}, {1, 1, 2.0}, {0, 1, 0.3}, {1, 0, 0.3}, {0, 1, -0.3}, {1, 0, -0.3},
  };
  const SparseMatrix B = SparseMatrix::from_triplets(2, cancel);
  CHECK(B.nonzeros() == 2);
  CHECK(B.value_at(0, 1) == 0.0);
}

TEST_CASE("from_triplets rejects bad input") {
  CHECK_THROWS_AS(SparseMatrix::from_triplets(2, std::vector<Triplet>{{0, 1, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      SparseMatrix::from_triplets(2, std::vector<Triplet>{{0, 1, 1.0}, {1, 0, 2.0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(SparseMatrix::from_triplets(2, std::vector<Triplet>{{0, 2, 1.0}, {2, 0, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SparseMatrix::from_triplets(0, std::vector<Triplet>{}),
                  std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(SparseMatrix::from_triplets(1, std::vector<Triplet>{{0, 0, inf}}),
                  std::invalid_argument);
}

TEST_CASE("to_triplets round trip") {
  const SparseMatrix A = gsor::kron_sum(gsor::tridiag(3, 4.0));
  const SparseMatrix B = SparseMatrix::from_triplets(A.size(), A.to_triplets());
  CHECK(A.row_start() == B.row_start());
  CHECK(A.col_index() == B.col_index());
  CHECK(A.values() == B.values());
}

TEST_CASE("multiply matches a dense product") {
  const SparseMatrix A = gsor::kron_sum(gsor::tridiag(2, 9.0));
  const std::vector<double> x = {1.0, -2.0, 0.5, 3.0};
  std::vector<double> expect(4, 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) expect[static_cast<std::size_t>(i)] += A.value_at(i, j) * x[static_cast<std::size_t>(j)];
  const std::vector<double> y = A.multiply(x);
  for (int i = 0; i < 4; ++i)
    CHECK(y[static_cast<std::size_t>(i)] == doctest::Approx(expect[static_cast<std::size_t>(i)]));

  CHECK_THROWS_AS(A.multiply(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("kron_sum structure") {
  const SparseMatrix K = gsor::kron_sum(gsor::tridiag(2, 9.0));
  CHECK(K.size() == 4);
  CHECK(K.nonzeros() == 12);
  CHECK(K.value_at(0, 0) == 36.0);
  CHECK(K.value_at(0, 1) == -9.0);
  CHECK(K.value_at(0, 2) == -9.0);
  CHECK(K.value_at(0, 3) == 0.0);

  const SparseMatrix K3 = gsor::kron_sum(gsor::tridiag(3, 1.0));
  CHECK(K3.size() == 9);
  CHECK(K3.nonzeros() == 5 * 9 - 4 * 3);
  CHECK_NOTHROW(K3.check_invariants());
}

TEST_CASE("add_scaled") {
  const SparseMatrix A = gsor::tridiag(3, 1.0);
  const SparseMatrix B = SparseMatrix::identity(3, 2.0);
  const SparseMatrix C = gsor::add_scaled(A, B, 2.0, 0.5);
  CHECK(C.value_at(0, 0) == 5.0);
  CHECK(C.value_at(0, 1) == -2.0);
  CHECK_NOTHROW(C.check_invariants());

  CHECK(gsor::add_scaled(A, A, 1.0, -1.0).nonzeros() == 0);
  CHECK_THROWS_AS(gsor::add_scaled(A, SparseMatrix::identity(4), 1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("add_scaled_identity and scaled") {
  const SparseMatrix A = gsor::tridiag(3, 1.0);
  const SparseMatrix S = gsor::add_scaled_identity(A, 3.0);
  CHECK(S.value_at(1, 1) == 5.0);
  CHECK(S.value_at(0, 1) == -1.0);

  const SparseMatrix N = gsor::scaled(A, -1.0);
  CHECK(N.value_at(0, 0) == -2.0);
  CHECK(N.value_at(0, 1) == 1.0);
  CHECK(gsor::scaled(A, 0.0).nonzeros() == 0);
}

TEST_CASE("add_rank_correction") {
  const SparseMatrix V = gsor::tridiag(4, 1.0);
  const std::vector<Triplet> corner = {{0, 3, -1.0}, {3, 0, -1.0}};
  const SparseMatrix Vc = gsor::add_rank_correction(V, corner);
  CHECK(Vc.value_at(0, 3) == -1.0);
  CHECK(Vc.value_at(3, 0) == -1.0);
  CHECK(Vc.value_at(0, 0) == 2.0);
  CHECK(Vc.nonzeros() == V.nonzeros() + 2);
  CHECK_NOTHROW(Vc.check_invariants());

  // an update can cancel existing entries
  const std::vector<Triplet> fill = {{0, 1, 1.0}, {1, 0, 1.0}};
  const SparseMatrix F = gsor::add_rank_correction(V, fill);
  CHECK(F.value_at(0, 1) == 0.0);
  CHECK(F.nonzeros() == V.nonzeros() - 2);

  CHECK_THROWS_AS(gsor::add_rank_correction(V, std::vector<Triplet>{{0, 3, -1.0}}),
                  std::invalid_argument);
}

TEST_CASE("value_at bounds") {
  const SparseMatrix A = gsor::tridiag(3, 1.0);
  CHECK_THROWS_AS(A.value_at(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(A.value_at(0, 3), std::invalid_argument);
}

}  // TEST_SUITE
