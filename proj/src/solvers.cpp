#include "gsor/solvers.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "gsor/cholesky.hpp"
#include "gsor/kernels.hpp"

namespace gsor {

namespace {

// residuals beyond this are treated as divergence
constexpr double kDivergenceCap = 1e12;

void validate(const SolverSettings& s, bool needs_omega) {
  if (!(std::isfinite(s.alpha) && s.alpha > 0.0))
    throw std::invalid_argument("solver: alpha must be positive");
  if (!(std::isfinite(s.tol) && s.tol > 0.0))
    throw std::invalid_argument("solver: tol must be positive");
  if (s.max_iter < 1) throw std::invalid_argument("solver: max_iter must be at least 1");
  if (needs_omega && (!s.omega || !std::isfinite(*s.omega)))
    throw std::invalid_argument("pgsor: omega is required");
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared sweep driver: the SOR update runs on (Ws, Ts, ps, qs) while the
// stopping residual is evaluated on the original problem.
SolveResult run_block_sor(const SpdFactorization& F, const SparseMatrix& Ws,
                          const SparseMatrix& Ts, const std::vector<double>& ps,
                          const std::vector<double>& qs, const ProblemInstance& prob,
                          const SolverSettings& s, const char* method) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = ps.size();
  const double a = s.alpha;

  SolveResult res;
  res.u.re.assign(n, 0.0);
  res.u.im.assign(n, 0.0);
  res.report.method = method;
  res.report.settings = s;

  double r = residual_norm(prob, res.u);
  res.report.residual_history.push_back(r);
  if (r < s.tol) {
    res.report.converged = true;
    res.report.seconds = elapsed_since(t0);
    return res;
  }

  std::vector<double> wa(n), tb(n), rhs(n);
  for (int k = 1; k <= s.max_iter; ++k) {
    // x <- Ws^{-1} [ (1-a) Ws x + a Ts y + a ps ]
    Ws.multiply(res.u.re, wa);
    Ts.multiply(res.u.im, tb);
    kernels::lincomb(1.0 - a, wa, a, tb, a, ps, rhs);
    F.solve(rhs, res.u.re);
    // y <- Ws^{-1} [ -a Ts x + (1-a) Ws y + a qs ]
    Ts.multiply(res.u.re, tb);
    Ws.multiply(res.u.im, wa);
    kernels::lincomb(-a, tb, 1.0 - a, wa, a, qs, rhs);
    F.solve(rhs, res.u.im);

    r = residual_norm(prob, res.u);
    res.report.residual_history.push_back(r);
    res.report.iterations = k;
    if (r < s.tol) {
      res.report.converged = true;
      break;
    }
    if (!std::isfinite(r) || r > kDivergenceCap) break;  // diverged
  }
  res.report.seconds = elapsed_since(t0);
  return res;
}

}  // namespace

double residual_norm(const ProblemInstance& prob, const PairVector& u) {
  const std::size_t n = static_cast<std::size_t>(prob.n());
  if (u.re.size() != n || u.im.size() != n)
    throw std::invalid_argument("residual_norm: dimension mismatch");
  const double bnorm =
      std::sqrt(kernels::dot(prob.p, prob.p) + kernels::dot(prob.q, prob.q));
  if (bnorm == 0.0)
    throw std::invalid_argument("residual_norm: zero right-hand side (degenerate problem)");

  std::vector<double> wa(n), tb(n), rr(n), ri(n);
  prob.W.multiply(u.re, wa);
  prob.T.multiply(u.im, tb);
  // rr = p - (W x - T y)
  kernels::lincomb(1.0, prob.p, -1.0, wa, 1.0, tb, rr);
  prob.T.multiply(u.re, tb);
  prob.W.multiply(u.im, wa);
  // ri = q - (T x + W y)
  kernels::lincomb(1.0, prob.q, -1.0, tb, -1.0, wa, ri);
  return std::sqrt(kernels::dot(rr, rr) + kernels::dot(ri, ri)) / bnorm;
}

SolveResult gsor_solve(const ProblemInstance& prob, const SolverSettings& settings) {
  validate(settings, false);
  const SpdFactorization F = factorize_spd(prob.W);
  return run_block_sor(F, prob.W, prob.T, prob.p, prob.q, prob, settings, "gsor");
}

SolveResult pgsor_solve(const ProblemInstance& prob, const SolverSettings& settings) {
  validate(settings, true);
  const double w = *settings.omega;
  const SparseMatrix Ws = add_scaled(prob.W, prob.T, w, 1.0);
  const SparseMatrix Ts = add_scaled(prob.T, prob.W, w, -1.0);
  const std::size_t n = static_cast<std::size_t>(prob.n());
  std::vector<double> ps(n), qs(n);
  kernels::lincomb(w, prob.p, 1.0, prob.q, ps);
  kernels::lincomb(w, prob.q, -1.0, prob.p, qs);

  SpdFactorization F;
  try {
    F = factorize_spd(Ws);
  } catch (const NotPositiveDefiniteError& e) {
    throw NotPositiveDefiniteError(
        "pgsor: omega*W + T is not positive definite (omega = " + std::to_string(w) +
            "): " + e.what(),
        e.row());
  }
  return run_block_sor(F, Ws, Ts, ps, qs, prob, settings, "pgsor");
}

SolveResult mhss_solve(const ProblemInstance& prob, const SolverSettings& s) {
  validate(s, false);
  const auto t0 = std::chrono::steady_clock::now();
  const double a = s.alpha;
  const std::size_t n = static_cast<std::size_t>(prob.n());

  const SpdFactorization Fw = factorize_spd(add_scaled_identity(prob.W, a));
  SpdFactorization Ft;
  try {
    Ft = factorize_spd(add_scaled_identity(prob.T, a));
  } catch (const NotPositiveDefiniteError& e) {
    throw NotPositiveDefiniteError(
        std::string("mhss: alpha*I + T is not positive definite: ") + e.what(), e.row());
  }

  SolveResult res;
  res.u.re.assign(n, 0.0);
  res.u.im.assign(n, 0.0);
  res.report.method = "mhss";
  res.report.settings = s;

  double r = residual_norm(prob, res.u);
  res.report.residual_history.push_back(r);
  if (r < s.tol) {
    res.report.converged = true;
    res.report.seconds = elapsed_since(t0);
    return res;
  }

  std::vector<double> tmp(n), rhs(n), xr(n), yr(n);
  for (int k = 1; k <= s.max_iter; ++k) {
    // (a I + W)(x' + i y') = (a I - i T)(x + i y) + (p + i q)
    prob.T.multiply(res.u.im, tmp);
    kernels::lincomb(a, res.u.re, 1.0, tmp, 1.0, prob.p, rhs);
    Fw.solve(rhs, xr);
    prob.T.multiply(res.u.re, tmp);
    kernels::lincomb(a, res.u.im, -1.0, tmp, 1.0, prob.q, rhs);
    Fw.solve(rhs, yr);
    // (a I + T)(x + i y) = (a I + i W)(x' + i y') - i (p + i q)
    prob.W.multiply(yr, tmp);
    kernels::lincomb(a, xr, -1.0, tmp, 1.0, prob.q, rhs);
    Ft.solve(rhs, res.u.re);
    prob.W.multiply(xr, tmp);
    kernels::lincomb(a, yr, 1.0, tmp, -1.0, prob.p, rhs);
    Ft.solve(rhs, res.u.im);

    r = residual_norm(prob, res.u);
    res.report.residual_history.push_back(r);
    res.report.iterations = k;
    if (r < s.tol) {
      res.report.converged = true;
      break;
    }
    if (!std::isfinite(r) || r > kDivergenceCap) break;
  }
  res.report.seconds = elapsed_since(t0);
  return res;
}

ProblemInstance complex_scale(const ProblemInstance& prob, double beta, double delta) {
  if (!std::isfinite(beta) || !std::isfinite(delta))
    throw std::invalid_argument("complex_scale: factors must be finite");
  if (beta == 0.0 && delta == 0.0)
    throw std::invalid_argument("complex_scale: beta and delta cannot both be zero");

  ProblemInstance out;
  out.config = prob.config;
  out.W = add_scaled(prob.W, prob.T, beta, delta);
  out.T = add_scaled(prob.T, prob.W, beta, -delta);
  const std::size_t n = static_cast<std::size_t>(prob.n());
  out.p.resize(n);
  out.q.resize(n);
  kernels::lincomb(beta, prob.p, delta, prob.q, out.p);
  kernels::lincomb(beta, prob.q, -delta, prob.p, out.q);

  try {
    factorize_spd(out.W);
  } catch (const NotPositiveDefiniteError& e) {
    throw NotPositiveDefiniteError(
        "complex_scale: beta*W + delta*T is not positive definite (beta = " +
            std::to_string(beta) + ", delta = " + std::to_string(delta) + "): " + e.what(),
        e.row());
  }
  return out;
}

}  // namespace gsor
