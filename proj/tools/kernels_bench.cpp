#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "CLI11.hpp"

#include "gsor/kernels.hpp"
#include "gsor/problems.hpp"

// Times the parallel kernel paths against their serial references on one of
// the built-in problems and checks that both produce bitwise-equal results.

namespace {

volatile double g_sink = 0.0;

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(eng() >> 11) * 0x1p-52 - 1.0;
  return v;
}

template <class F>
double best_seconds(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](double x, double y) { return x == y && std::signbit(x) == std::signbit(y); });
}

void print_line(const char* name, double serial, double parallel, bool same) {
  std::printf("%-9s %12.2f %14.2f %9.2fx   %s\n", name, serial * 1e6, parallel * 1e6,
              serial / parallel, same ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel timing: serial references vs the parallel paths"};
  int m = 128;
  int example = 1;
  int reps = 50;
  app.add_option("--m", m, "Grid size; n = m^2")->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--example", example, "Built-in problem (1-4)")->check(CLI::Range(1, 4))
      ->capture_default_str();
  app.add_option("--reps", reps, "Repetitions per kernel (best time wins)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  gsor::ProblemConfig cfg;
  cfg.example = example;
  cfg.m = m;
  const gsor::ProblemInstance inst = gsor::make_instance(cfg);
  const gsor::SparseMatrix& W = inst.W;
  const std::size_t n = static_cast<std::size_t>(W.size());

  const std::vector<double> x = random_vector(n, 0xbe11);
  const std::vector<double> z = random_vector(n, 0xca11);
  std::vector<double> ys(n), yp(n), ls(n), lp(n);

  using gsor::kernels::dot;
  using gsor::kernels::dot_serial;
  using gsor::kernels::lincomb;
  using gsor::kernels::lincomb_serial;
  using gsor::kernels::spmv;
  using gsor::kernels::spmv_serial;

  const std::int64_t* rs = W.row_start().data();
  const int* ci = W.col_index().data();
  const double* vals = W.values().data();
  const std::int64_t rows = W.size();

  gsor::kernels::set_parallel(true);
  std::printf("n = %zu, nnz = %lld, threads = %d, reps = %d\n", n,
              static_cast<long long>(W.nonzeros()), gsor::kernels::thread_count(), reps);
  std::printf("%-9s %12s %14s %10s   %s\n", "kernel", "serial (us)", "parallel (us)",
              "speedup", "bitwise");

  const double t_spmv_s = best_seconds(reps, [&] { spmv_serial(rows, rs, ci, vals, x.data(), ys.data()); });
  const double t_spmv_p = best_seconds(reps, [&] { spmv(rows, rs, ci, vals, x.data(), yp.data()); });
  const bool spmv_same = bitwise_equal(ys, yp);
  print_line("spmv", t_spmv_s, t_spmv_p, spmv_same);

  double ds = 0.0, dp = 0.0;
  const double t_dot_s = best_seconds(reps, [&] { ds = dot_serial(x, z); g_sink = ds; });
  const double t_dot_p = best_seconds(reps, [&] { dp = dot(x, z); g_sink = dp; });
  const bool dot_same = ds == dp && std::signbit(ds) == std::signbit(dp);
  print_line("dot", t_dot_s, t_dot_p, dot_same);

  const double t_lc_s = best_seconds(reps, [&] { lincomb_serial(1.25, x, -0.75, z, ls); });
  const double t_lc_p = best_seconds(reps, [&] { lincomb(1.25, x, -0.75, z, lp); });
  const bool lc_same = bitwise_equal(ls, lp);
  print_line("lincomb", t_lc_s, t_lc_p, lc_same);

  return (spmv_same && dot_same && lc_same) ? 0 : 1;
}
