#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "gsor/solvers.hpp"
#include "gsor/sparse.hpp"

namespace gsor {

struct PowerOpts {
  int max_iters = 200;
  double tol = 1e-8;  // relative change between successive estimates
  std::uint64_t seed = 0x67736f72u;  // start-vector seed; fixed so runs reproduce
};

struct PowerResult {
  double value = 0.0;
  int iterations = 0;
  double last_change = 0.0;
};

/// Spectral bounds of S = W^{-1} T (all eigenvalues are real and
/// nonnegative when W is SPD and T is symmetric positive semidefinite).
struct SpectralEstimate {
  double mu_min = 0.0;
  double mu_max = 0.0;
  PowerResult max_info;
  PowerResult min_info;
  bool t_spd = true;  // false when the T factorization failed (mu_min = 0)
};

/// Largest eigenvalue of W^{-1} T by power iteration with the W-inner
/// Rayleigh quotient z^T T z / z^T W z. Deterministic seeded start vector.
PowerResult estimate_mu_max(const SparseMatrix& W, const SparseMatrix& T,
                            const PowerOpts& opts = {});

/// Smallest eigenvalue by inverse iteration (roles of W and T exchanged).
/// Returns 0 when T is not positive definite.
PowerResult estimate_mu_min(const SparseMatrix& W, const SparseMatrix& T,
                            const PowerOpts& opts = {});

SpectralEstimate estimate_spectrum(const SparseMatrix& W, const SparseMatrix& T,
                                   const PowerOpts& opts = {}, bool force_mu_min_zero = false);

/// Parameters chosen for a solver, with the convergence factor the choice
/// predicts (1 - alpha for the SOR-type iterations at their optimum).
struct ParamChoice {
  double alpha = 0.0;
  std::optional<double> omega;
  double predicted_rho = 0.0;
};

/// Eigenvalue map mu -> (omega*mu - 1) / (omega + mu) taking the spectrum of
/// W^{-1} T to the spectrum of the omega-scaled system.
double map_lambda(double omega, double mu);

/// Spectral radius of the scaled system from the estimated extremes:
/// max{ (1 - omega*mu_min)/(omega + mu_min), (omega*mu_max - 1)/(omega + mu_max) }.
double rho_S_tilde(double omega, const SpectralEstimate& est);

/// alpha* = 2 / (1 + sqrt(1 + rho^2)) for an iteration whose W^{-1}T-analogue
/// has spectral radius rho; predicted factor 1 - alpha*.
ParamChoice gsor_optimal_alpha(double rho_S);

/// Optimal (alpha*, omega*) pair from the spectral estimate; requires
/// mu_max > 0.
ParamChoice pgsor_optimal_params(const SpectralEstimate& est);

/// Open interval (0, 2 / (1 + mu_max)) of convergent alpha values.
std::pair<double, double> gsor_convergence_interval(double mu_max);

/// Scaling pays off when rho_S_tilde can drop below this value:
/// max{0, (1 - mu_min*mu_max) / (mu_min + mu_max)}.
double improvement_threshold(const SpectralEstimate& est);

/// Spectrum-free fallback (alpha, omega) = (0.828, 1.0).
ParamChoice approx_params();

/// Geometric mean of the residual ratios over the final five iterations.
/// Requires a converged report with at least six residual entries.
double observed_convergence_factor(const SolverReport& report);

}  // namespace gsor
