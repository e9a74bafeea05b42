#include "gsor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

#include "gsor/dense.hpp"
#include "gsor/solvers.hpp"
#include "gsor/spectral.hpp"

namespace gsor::verify {

namespace {

// Uniform doubles from raw engine output so sequences are identical across
// platforms (distribution classes are not).
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1p-53;
}

double uniform(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

std::string format(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

void record_failure(PropertyResult& r, std::string note) {
  ++r.failures;
  if (r.notes.size() < 8) r.notes.push_back(std::move(note));
}

// Gram matrix G = M^T M (+ shift I) emitted as exactly symmetric triplets:
// each off-diagonal value is computed once and mirrored.
SparseMatrix gram(int n, const std::vector<double>& M, int rows, double shift) {
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k < rows; ++k)
        v += M[static_cast<std::size_t>(k) * n + i] * M[static_cast<std::size_t>(k) * n + j];
      if (i == j) v += shift;
      if (v == 0.0) continue;
      trip.push_back({i, j, v});
      if (i != j) trip.push_back({j, i, v});
    }
  }
  return SparseMatrix::from_triplets(n, trip);
}

std::vector<double> random_entries(std::size_t count, std::mt19937_64& eng) {
  std::vector<double> v(count);
  for (auto& x : v) x = uniform(eng, -1.0, 1.0);
  return v;
}

dense::Matrix dense_combine(const dense::Matrix& A, const dense::Matrix& B, double ca, double cb) {
  dense::Matrix C(A.n);
  for (std::size_t k = 0; k < C.a.size(); ++k) C.a[k] = ca * A.a[k] + cb * B.a[k];
  return C;
}

// Extreme eigenvalues of W^{-1} T by the dense oracle; tiny negative values
// from roundoff on singular T are clamped to zero.
SpectralEstimate oracle_spectrum(const SparseMatrix& W, const SparseMatrix& T) {
  const auto mus = dense::eigenvalues_pencil(dense::from_sparse(T), dense::from_sparse(W));
  SpectralEstimate est;
  est.mu_min = std::max(0.0, mus.front());
  est.mu_max = std::max(0.0, mus.back());
  return est;
}

}  // namespace

SparseMatrix random_spd(int n, std::mt19937_64& eng) {
  const auto M = random_entries(static_cast<std::size_t>(n) * n, eng);
  return gram(n, M, n, static_cast<double>(n));
}

SparseMatrix random_psd(int n, int rank, std::mt19937_64& eng) {
  const auto M = random_entries(static_cast<std::size_t>(rank) * n, eng);
  return gram(n, M, rank, 0.0);
}

ProblemInstance random_instance(int n, int rank, std::mt19937_64& eng) {
  ProblemInstance prob;
  prob.config = ProblemConfig{.example = 0, .m = n};
  prob.W = random_spd(n, eng);
  prob.T = random_psd(n, rank, eng);
  prob.p = random_entries(static_cast<std::size_t>(n), eng);
  prob.q = random_entries(static_cast<std::size_t>(n), eng);
  return prob;
}

PropertyResult check_eigen_map(std::uint64_t seed, int trials) {
  PropertyResult r;
  r.name = "eigen-map";
  r.trials = trials;
  std::mt19937_64 eng(seed);
  const double omegas[] = {0.5, 1.0, 2.0};

  for (int t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(eng() % 7);
    const int rank = 1 + static_cast<int>(eng() % static_cast<unsigned>(n));
    const double omega = omegas[t % 3];
    const SparseMatrix W = random_spd(n, eng);
    const SparseMatrix T = random_psd(n, rank, eng);

    const dense::Matrix Wd = dense::from_sparse(W);
    const dense::Matrix Td = dense::from_sparse(T);
    const auto mus = dense::eigenvalues_pencil(Td, Wd);
    const auto lambdas =
        dense::eigenvalues_pencil(dense_combine(Td, Wd, omega, -1.0),
                                  dense_combine(Wd, Td, omega, 1.0));

    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double mapped = map_lambda(omega, std::max(0.0, mus[static_cast<std::size_t>(i)]));
      worst = std::max(worst, std::abs(lambdas[static_cast<std::size_t>(i)] - mapped));
    }
    if (!(worst <= 1e-9))
      record_failure(r, format("trial %d: max |lambda - mapped mu| = %.3e (n = %d, omega = %g)",
                               t, worst, n, omega));
  }
  return r;
}

PropertyResult check_parameter_bounds(std::uint64_t seed, int trials) {
  PropertyResult r;
  r.name = "parameter-bounds";
  r.trials = trials;
  std::mt19937_64 eng(seed);
  const double rho_cap = (std::sqrt(2.0) - 1.0) / (std::sqrt(2.0) + 1.0);

  for (int t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(eng() % 9);
    const int rank = 1 + static_cast<int>(eng() % static_cast<unsigned>(n));
    const SparseMatrix W = random_spd(n, eng);
    const SparseMatrix T = random_psd(n, rank, eng);
    const SpectralEstimate est = oracle_spectrum(W, T);
    const ParamChoice pc = pgsor_optimal_params(est);

    if (!(pc.alpha > 0.828 && pc.alpha <= 1.0)) {
      record_failure(r, format("trial %d: alpha = %.12g outside (0.828, 1]", t, pc.alpha));
      continue;
    }
    if (!(pc.predicted_rho < rho_cap + 1e-12)) {
      record_failure(r, format("trial %d: predicted rho = %.12g >= %.12g", t,
                               pc.predicted_rho, rho_cap));
      continue;
    }

    const dense::Matrix Wd = dense::from_sparse(W);
    const dense::Matrix Td = dense::from_sparse(T);
    const double omega = *pc.omega;
    const double radius =
        dense::spectral_radius_pencil(dense_combine(Td, Wd, omega, -1.0),
                                      dense_combine(Wd, Td, omega, 1.0));
    if (!(radius < 1.0)) {
      record_failure(r, format("trial %d: scaled radius = %.12g not below 1", t, radius));
      continue;
    }
    const double formula = rho_S_tilde(omega, est);
    if (!(std::abs(formula - radius) <= 1e-8)) {
      record_failure(r, format("trial %d: rho formula %.12g vs dense %.12g at omega* = %g", t,
                               formula, radius, omega));
      continue;
    }
    // Same identity away from the optimum.
    const double other = uniform(eng, 0.5, 2.5);
    const double radius2 =
        dense::spectral_radius_pencil(dense_combine(Td, Wd, other, -1.0),
                                      dense_combine(Wd, Td, other, 1.0));
    if (!(std::abs(rho_S_tilde(other, est) - radius2) <= 1e-8))
      record_failure(r, format("trial %d: rho formula %.12g vs dense %.12g at omega = %g", t,
                               rho_S_tilde(other, est), radius2, other));
  }
  return r;
}

PropertyResult check_scaling_equivalence(std::uint64_t seed, int trials) {
  PropertyResult r;
  r.name = "scaling-equivalence";
  r.trials = trials;
  std::mt19937_64 eng(seed);

  for (int t = 0; t < trials; ++t) {
    const int n = 3 + static_cast<int>(eng() % 8);
    const int rank = 1 + static_cast<int>(eng() % static_cast<unsigned>(n));
    const ProblemInstance prob = random_instance(n, rank, eng);
    const double alpha = uniform(eng, 0.4, 1.0);
    const double omega = uniform(eng, 0.6, 2.6);
    const int sweeps = 1 + t % 10;

    SolverSettings direct;
    direct.alpha = alpha;
    direct.omega = omega;
    direct.tol = 1e-300;  // never satisfied: run exactly `sweeps` iterations
    direct.max_iter = sweeps;
    SolverSettings plain = direct;
    plain.omega.reset();

    const SolveResult a = pgsor_solve(prob, direct);
    const SolveResult b = gsor_solve(complex_scale(prob, omega, 1.0), plain);

    double worst = 0.0;
    for (std::size_t i = 0; i < a.u.re.size(); ++i) {
      worst = std::max(worst, std::abs(a.u.re[i] - b.u.re[i]));
      worst = std::max(worst, std::abs(a.u.im[i] - b.u.im[i]));
    }
    if (worst != 0.0 || a.report.iterations != b.report.iterations)
      record_failure(r, format("trial %d: iterates differ by %.3e after %d sweeps (n = %d)", t,
                               worst, sweeps, n));
  }
  return r;
}

PropertyResult check_convergence_boundary(std::uint64_t seed, int trials) {
  PropertyResult r;
  r.name = "convergence-boundary";
  r.trials = trials;
  std::mt19937_64 eng(seed);
  const int n = 4;

  for (int t = 0; t < trials; ++t) {
    const double mu = uniform(eng, 0.5, 5.0);
    ProblemInstance prob;
    prob.config = ProblemConfig{.example = 0, .m = n};
    prob.W = SparseMatrix::identity(n);
    prob.T = SparseMatrix::identity(n, mu);
    prob.p.assign(static_cast<std::size_t>(n), 1.0);
    prob.q.assign(static_cast<std::size_t>(n), 1.0);
    const double boundary = 2.0 / (1.0 + mu);

    SolverSettings inside;
    inside.alpha = 0.9 * boundary;
    inside.tol = 1e-10;
    inside.max_iter = 2000;
    const SolveResult good = gsor_solve(prob, inside);
    if (!good.report.converged) {
      record_failure(r, format("trial %d: alpha = %.6g inside (0, %.6g) did not converge", t,
                               inside.alpha, boundary));
      continue;
    }

    SolverSettings outside = inside;
    outside.alpha = 1.1 * boundary;
    outside.max_iter = 200;
    const SolveResult bad = gsor_solve(prob, outside);
    const auto& hist = bad.report.residual_history;
    const bool grew = !std::isfinite(hist.back()) || hist.back() > 10.0 * hist.front();
    if (bad.report.converged || !grew)
      record_failure(r, format("trial %d: alpha = %.6g outside the interval did not diverge "
                               "(final residual %.3e)",
                               t, outside.alpha, hist.back()));
  }
  return r;
}

std::vector<PropertyResult> run_all(std::uint64_t seed, int trials) {
  return {
      check_eigen_map(seed, trials),
      check_parameter_bounds(seed + 1, trials),
      check_scaling_equivalence(seed + 2, trials),
      check_convergence_boundary(seed + 3, trials),
  };
}

}  // namespace gsor::verify
