#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "gsor/kernels.hpp"
#include "gsor/problems.hpp"

namespace {

std::vector<double> rnd(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(eng() >> 11) * 0x1p-52 - 1.0;
  return v;
}

struct ParallelGuard {
  bool old = gsor::kernels::parallel_enabled();
  explicit ParallelGuard(bool on) { gsor::kernels::set_parallel(on); }
  ~ParallelGuard() { gsor::kernels::set_parallel(old); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("dot matches a plain loop") {
  for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{100}, std::size_t{2000}}) {
    const auto a = rnd(n, 11 + n);
    const auto b = rnd(n, 23 + n);
    double expect = 0.0;
    for (std::size_t i = 0; i < n; ++i) expect += a[i] * b[i];
    // below the block size the reduction is a single left-to-right sum
    CHECK(gsor::kernels::dot(a, b) == expect);
  }
  const std::size_t n = 50000;
  const auto a = rnd(n, 1);
  const auto b = rnd(n, 2);
  double expect = 0.0;
  for (std::size_t i = 0; i < n; ++i) expect += a[i] * b[i];
  CHECK(gsor::kernels::dot(a, b) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("norm2 of a 3-4-5 triangle") {
  const std::vector<double> v = {3.0, 4.0};
  CHECK(gsor::kernels::norm2(v) == 5.0);
}

TEST_CASE("lincomb supports aliasing") {
  const std::vector<double> a = {1.0, 2.0, 3.0};
  const std::vector<double> b = {4.0, 5.0, 6.0};
  std::vector<double> out(3);
  gsor::kernels::lincomb(2.0, a, -1.0, b, out);
  CHECK(out == std::vector<double>{-2.0, -1.0, 0.0});

  std::vector<double> inplace = a;
  gsor::kernels::lincomb(2.0, inplace, -1.0, b, inplace);
  CHECK(inplace == out);

  std::vector<double> c = {10.0, 10.0, 10.0};
  gsor::kernels::lincomb(2.0, a, -1.0, b, 0.1, c, out);
  CHECK(out == std::vector<double>{-1.0, 0.0, 1.0});
}

TEST_CASE("spmv matches triplet accumulation") {
  const gsor::ProblemInstance inst = gsor::gen_example1(6);
  const gsor::SparseMatrix& W = inst.W;
  const std::size_t n = static_cast<std::size_t>(W.size());
  const auto x = rnd(n, 99);

  std::vector<double> expect(n, 0.0);
  for (const auto& t : W.to_triplets())
    expect[static_cast<std::size_t>(t.row)] += t.value * x[static_cast<std::size_t>(t.col)];

  std::vector<double> y(n);
  gsor::kernels::spmv(W.size(), W.row_start().data(), W.col_index().data(), W.values().data(),
                      x.data(), y.data());
  for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == doctest::Approx(expect[i]).epsilon(1e-13));

  // the member multiply goes through the same kernel
  CHECK(W.multiply(x) == y);
}

TEST_CASE("parallel and serial paths agree bitwise") {
  ParallelGuard guard(true);
  const std::size_t n = 100000;
  const auto a = rnd(n, 5);
  const auto b = rnd(n, 6);

  const double dp = gsor::kernels::dot(a, b);
  const double ds = gsor::kernels::dot_serial(a, b);
  CHECK(dp == ds);
  CHECK(std::signbit(dp) == std::signbit(ds));

  std::vector<double> op(n), os(n);
  gsor::kernels::lincomb(1.25, a, -0.75, b, op);
  gsor::kernels::lincomb_serial(1.25, a, -0.75, b, os);
  CHECK(op == os);

  const gsor::SparseMatrix W = gsor::gen_example1(64).W;
  const std::size_t wn = static_cast<std::size_t>(W.size());
  const auto x = rnd(wn, 7);
  std::vector<double> yp(wn), ys(wn);
  gsor::kernels::spmv(W.size(), W.row_start().data(), W.col_index().data(), W.values().data(),
                      x.data(), yp.data());
  gsor::kernels::spmv_serial(W.size(), W.row_start().data(), W.col_index().data(),
                             W.values().data(), x.data(), ys.data());
  CHECK(yp == ys);

  // disabling the parallel paths must not change any result either
  gsor::kernels::set_parallel(false);
  CHECK(gsor::kernels::dot(a, b) == dp);
  std::vector<double> od(n);
  gsor::kernels::lincomb(1.25, a, -0.75, b, od);
  CHECK(od == op);
}

TEST_CASE("thread controls") {
  ParallelGuard guard(true);
  CHECK(gsor::kernels::thread_count() >= 1);
  gsor::kernels::set_parallel(false);
  CHECK_FALSE(gsor::kernels::parallel_enabled());
  CHECK(gsor::kernels::thread_count() == 1);
}

}  // TEST_SUITE
