#pragma once

#include <cstdint>
#include <span>

// Vector and raw-CSR kernels shared by the solver stack.
//
// Reductions use a fixed block decomposition: partial sums are formed per
// block and combined in block order, so the parallel and serial paths give
// bitwise-identical results and output never depends on the thread count.
namespace gsor::kernels {

/// Enable or disable the OpenMP paths at runtime. On by default when the
/// library is compiled with OpenMP; a no-op otherwise.
void set_parallel(bool on);
bool parallel_enabled();

/// Number of threads the parallel paths would use (1 when disabled).
int thread_count();

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

/// out = ca*a + cb*b (out may alias a or b)
void lincomb(double ca, std::span<const double> a,
             double cb, std::span<const double> b,
             std::span<double> out);

/// out = ca*a + cb*b + cc*c (out may alias any input)
void lincomb(double ca, std::span<const double> a,
             double cb, std::span<const double> b,
             double cc, std::span<const double> c,
             std::span<double> out);

/// y = A*x for an n-row CSR matrix. Row sums are accumulated left to right,
/// one row per task, so the result is independent of scheduling.
void spmv(std::int64_t n, const std::int64_t* rowstart, const int* colindex,
          const double* values, const double* x, double* y);

// Serial reference implementations. They perform the same blocked
// arithmetic as the parallel paths; results must match bitwise.
double dot_serial(std::span<const double> a, std::span<const double> b);
void spmv_serial(std::int64_t n, const std::int64_t* rowstart, const int* colindex,
                 const double* values, const double* x, double* y);
void lincomb_serial(double ca, std::span<const double> a,
                    double cb, std::span<const double> b,
                    std::span<double> out);

}  // namespace gsor::kernels
