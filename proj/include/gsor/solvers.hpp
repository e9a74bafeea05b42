#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsor/problems.hpp"

namespace gsor {

/// Real and imaginary parts of the unknown u = re + i*im.
struct PairVector {
  std::vector<double> re;
  std::vector<double> im;
};

struct SolverSettings {
  double alpha = 0.5;
  std::optional<double> omega;  // pgsor only
  double tol = 1e-6;
  int max_iter = 10000;
};

struct SolverReport {
  std::string method;
  SolverSettings settings;
  bool converged = false;
  int iterations = 0;
  // relative residuals; entry 0 is the initial residual, one entry per sweep
  // afterwards (length iterations + 1)
  std::vector<double> residual_history;
  double seconds = 0.0;
};

struct SolveResult {
  PairVector u;
  SolverReport report;
};

/// ||b - A u||_2 / ||b||_2 for the complex system, evaluated in real
/// arithmetic. Throws when ||b|| is zero.
double residual_norm(const ProblemInstance& prob, const PairVector& u);

/// Block SOR iteration on (W, T): each sweep solves two systems with the W
/// factor. Converges for 0 < alpha < 2 / (1 + mu_max).
SolveResult gsor_solve(const ProblemInstance& prob, const SolverSettings& settings);

/// Same iteration applied to the scaled system (omega*W + T, omega*T - W);
/// the residual is still measured on the original system. settings.omega is
/// required.
SolveResult pgsor_solve(const ProblemInstance& prob, const SolverSettings& settings);

/// Modified HSS iteration: alternate half-sweeps with the alpha*I + W and
/// alpha*I + T factors, carried out in real arithmetic (two solves per
/// half-step).
SolveResult mhss_solve(const ProblemInstance& prob, const SolverSettings& settings);

/// Equivalent system (beta*W + delta*T, beta*T - delta*W) with right-hand
/// side (beta*p + delta*q, beta*q - delta*p). The scaled W must stay
/// positive definite (asserted by factorization).
ProblemInstance complex_scale(const ProblemInstance& prob, double beta, double delta);

}  // namespace gsor
