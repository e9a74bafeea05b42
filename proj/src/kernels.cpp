#include "gsor/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsor::kernels {

namespace {

std::atomic<bool> g_parallel{true};

// Reduction block size; fixed so that blocked sums are reproducible.
constexpr std::size_t kBlock = 2048;
// Below this size the parallel paths fall back to plain loops.
constexpr std::size_t kParallelCutoff = 8192;

inline double block_dot(const double* a, const double* b, std::size_t lo, std::size_t hi) {
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
  return s;
}

double dot_impl(const double* a, const double* b, std::size_t n, bool par) {
  if (n <= kBlock) return block_dot(a, b, 0, n);
  const std::int64_t nblocks = static_cast<std::int64_t>((n + kBlock - 1) / kBlock);
  std::vector<double> partial(static_cast<std::size_t>(nblocks));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par && n >= kParallelCutoff)
#endif
  for (std::int64_t bi = 0; bi < nblocks; ++bi) {
    const std::size_t lo = static_cast<std::size_t>(bi) * kBlock;
    partial[static_cast<std::size_t>(bi)] = block_dot(a, b, lo, std::min(n, lo + kBlock));
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

void spmv_impl(std::int64_t n, const std::int64_t* rowstart, const int* colindex,
               const double* values, const double* x, double* y, bool par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par && n >= 512)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::int64_t k = rowstart[i]; k < rowstart[i + 1]; ++k)
      s += values[k] * x[colindex[k]];
    y[i] = s;
  }
}

void lincomb2_impl(double ca, const double* a, double cb, const double* b,
                   double* out, std::size_t n, bool par) {
  const std::int64_t sn = static_cast<std::int64_t>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par && n >= kParallelCutoff)
#endif
  for (std::int64_t i = 0; i < sn; ++i) out[i] = ca * a[i] + cb * b[i];
}

}  // namespace

void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

bool parallel_enabled() {
#ifdef _OPENMP
  return g_parallel.load(std::memory_order_relaxed);
#else
  return false;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return parallel_enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return dot_impl(a.data(), b.data(), a.size(), parallel_enabled());
}

double dot_serial(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return dot_impl(a.data(), b.data(), a.size(), false);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void lincomb(double ca, std::span<const double> a,
             double cb, std::span<const double> b,
             std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  lincomb2_impl(ca, a.data(), cb, b.data(), out.data(), out.size(), parallel_enabled());
}

void lincomb_serial(double ca, std::span<const double> a,
                    double cb, std::span<const double> b,
                    std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  lincomb2_impl(ca, a.data(), cb, b.data(), out.data(), out.size(), false);
}

void lincomb(double ca, std::span<const double> a,
             double cb, std::span<const double> b,
             double cc, std::span<const double> c,
             std::span<double> out) {
  assert(a.size() == b.size() && a.size() == c.size() && a.size() == out.size());
  const double* ap = a.data();
  const double* bp = b.data();
  const double* cp = c.data();
  double* op = out.data();
  const std::int64_t n = static_cast<std::int64_t>(out.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel_enabled() && out.size() >= kParallelCutoff)
#endif
  for (std::int64_t i = 0; i < n; ++i) op[i] = ca * ap[i] + cb * bp[i] + cc * cp[i];
}

void spmv(std::int64_t n, const std::int64_t* rowstart, const int* colindex,
          const double* values, const double* x, double* y) {
  spmv_impl(n, rowstart, colindex, values, x, y, parallel_enabled());
}

void spmv_serial(std::int64_t n, const std::int64_t* rowstart, const int* colindex,
                 const double* values, const double* x, double* y) {
  spmv_impl(n, rowstart, colindex, values, x, y, false);
}

}  // namespace gsor::kernels
