#include "gsor/spectral.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gsor/cholesky.hpp"
#include "gsor/kernels.hpp"

namespace gsor {

namespace {

// Deterministic start vector in [-1, 1)^n. The engine is fully specified by
// the standard, so estimates reproduce across platforms; the raw bits are
// mapped manually because distribution classes are not portable.
std::vector<double> seeded_vector(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> z(static_cast<std::size_t>(n));
  for (double& v : z) v = static_cast<double>(eng() >> 11) * 0x1p-52 - 1.0;
  return z;
}

void normalize(std::vector<double>& z) {
  const double nrm = kernels::norm2(z);
  for (double& v : z) v /= nrm;
}

// Generalized power iteration for the pencil (B, A): iterates z <- A^{-1} B z
// and returns the limit of z^T B z / z^T A z, the extreme eigenvalue of
// A^{-1} B reachable from the start vector.
PowerResult rayleigh_power(const SpdFactorization& F, const SparseMatrix& A,
                           const SparseMatrix& B, const PowerOpts& opts) {
  const int n = A.size();
  PowerResult out;

  std::vector<double> z;
  std::vector<double> bz(static_cast<std::size_t>(n));
  // redraw when the start vector is annihilated by B (possible when B = 0)
  for (int attempt = 0;; ++attempt) {
    z = seeded_vector(n, opts.seed + static_cast<std::uint64_t>(attempt));
    normalize(z);
    B.multiply(z, bz);
    if (kernels::norm2(bz) != 0.0) break;
    if (attempt == 2) return out;  // B vanishes on the sampled space: report 0
  }

  std::vector<double> az(static_cast<std::size_t>(n));
  double value = 0.0;
  for (int k = 1; k <= opts.max_iters; ++k) {
    B.multiply(z, bz);
    if (kernels::norm2(bz) == 0.0) {  // landed exactly in the nullspace of B
      out.value = value;
      out.iterations = k;
      return out;
    }
    A.multiply(z, az);
    const double next = kernels::dot(z, bz) / kernels::dot(z, az);
    out.iterations = k;
    out.last_change = std::abs(next - value) / std::max(std::abs(next), 1e-300);
    value = next;
    if (k > 1 && out.last_change <= opts.tol) break;
    F.solve(bz, z);
    normalize(z);
  }
  out.value = value;
  return out;
}

}  // namespace

PowerResult estimate_mu_max(const SparseMatrix& W, const SparseMatrix& T,
                            const PowerOpts& opts) {
  if (W.size() != T.size()) throw std::invalid_argument("estimate_mu_max: dimension mismatch");
  if (opts.max_iters < 1 || !(opts.tol > 0.0))
    throw std::invalid_argument("estimate_mu_max: bad options");
  const SpdFactorization F = factorize_spd(W);
  return rayleigh_power(F, W, T, opts);
}

PowerResult estimate_mu_min(const SparseMatrix& W, const SparseMatrix& T,
                            const PowerOpts& opts) {
  if (W.size() != T.size()) throw std::invalid_argument("estimate_mu_min: dimension mismatch");
  if (opts.max_iters < 1 || !(opts.tol > 0.0))
    throw std::invalid_argument("estimate_mu_min: bad options");
  SpdFactorization F;
  try {
    F = factorize_spd(T);
  } catch (const NotPositiveDefiniteError&) {
    return {};  // T only semidefinite: mu_min = 0 by convention
  }
  // largest eigenvalue nu of T^{-1} W gives mu_min = 1 / nu
  PowerResult r = rayleigh_power(F, T, W, opts);
  r.value = 1.0 / r.value;  // W is SPD, so nu > 0
  return r;
}

SpectralEstimate estimate_spectrum(const SparseMatrix& W, const SparseMatrix& T,
                                   const PowerOpts& opts, bool force_mu_min_zero) {
  SpectralEstimate est;
  est.max_info = estimate_mu_max(W, T, opts);
  est.mu_max = est.max_info.value;
  if (force_mu_min_zero) {
    est.mu_min = 0.0;
  } else {
    est.min_info = estimate_mu_min(W, T, opts);
    est.t_spd = !(est.min_info.iterations == 0 && est.min_info.value == 0.0);
    // iteration noise must not leave mu_min above mu_max
    est.mu_min = std::min(est.min_info.value, est.mu_max);
  }
  return est;
}

double map_lambda(double omega, double mu) {
  if (!(omega > 0.0) || !(mu >= 0.0))
    throw std::invalid_argument("map_lambda: need omega > 0 and mu >= 0");
  return (omega * mu - 1.0) / (omega + mu);
}

double rho_S_tilde(double omega, const SpectralEstimate& est) {
  if (!(omega > 0.0)) throw std::invalid_argument("rho_S_tilde: omega must be positive");
  if (!(est.mu_min >= 0.0) || !(est.mu_max >= est.mu_min))
    throw std::invalid_argument("rho_S_tilde: invalid spectral estimate");
  const double lo = (1.0 - omega * est.mu_min) / (omega + est.mu_min);
  const double hi = (omega * est.mu_max - 1.0) / (omega + est.mu_max);
  return std::max(lo, hi);
}

ParamChoice gsor_optimal_alpha(double rho_S) {
  if (!(rho_S >= 0.0) || !std::isfinite(rho_S))
    throw std::invalid_argument("gsor_optimal_alpha: rho must be nonnegative");
  ParamChoice pc;
  pc.alpha = 2.0 / (1.0 + std::sqrt(1.0 + rho_S * rho_S));
  pc.predicted_rho = 1.0 - pc.alpha;
  return pc;
}

ParamChoice pgsor_optimal_params(const SpectralEstimate& est) {
  const double mn = est.mu_min;
  const double mx = est.mu_max;
  if (!(mn >= 0.0) || !(mx >= mn))
    throw std::invalid_argument("pgsor_optimal_params: invalid spectral estimate");
  if (!(mx > 0.0))
    throw std::invalid_argument("pgsor_optimal_params: degenerate spectrum (mu_max = 0)");

  const double omega =
      (1.0 - mn * mx + std::sqrt((1.0 + mn * mn) * (1.0 + mx * mx))) / (mn + mx);
  const double xi = (1.0 - omega * mn) / (omega + mn);
  ParamChoice pc = gsor_optimal_alpha(xi);
  pc.omega = omega;
  return pc;
}

std::pair<double, double> gsor_convergence_interval(double mu_max) {
  if (!(mu_max >= 0.0)) throw std::invalid_argument("gsor_convergence_interval: mu_max < 0");
  return {0.0, 2.0 / (1.0 + mu_max)};
}

double improvement_threshold(const SpectralEstimate& est) {
  const double mn = est.mu_min;
  const double mx = est.mu_max;
  if (!(mn >= 0.0) || !(mx >= mn))
    throw std::invalid_argument("improvement_threshold: invalid spectral estimate");
  if (!(mn + mx > 0.0))
    throw std::invalid_argument("improvement_threshold: degenerate spectrum");
  return std::max(0.0, (1.0 - mn * mx) / (mn + mx));
}

ParamChoice approx_params() {
  ParamChoice pc;
  pc.alpha = 0.828;
  pc.omega = 1.0;
  pc.predicted_rho = 1.0 - pc.alpha;
  return pc;
}

double observed_convergence_factor(const SolverReport& report) {
  if (!report.converged)
    throw std::invalid_argument("observed_convergence_factor: run did not converge");
  const auto& h = report.residual_history;
  if (h.size() < 6)
    throw std::invalid_argument(
        "observed_convergence_factor: insufficient data (need at least 6 residuals, have " +
        std::to_string(h.size()) + ")");
  const std::size_t k = h.size() - 1;
  return std::pow(h[k] / h[k - 5], 0.2);
}

}  // namespace gsor
