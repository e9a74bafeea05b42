#include "gsor/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gsor/cholesky.hpp"
#include "gsor/kernels.hpp"
#include "gsor/mmio.hpp"

namespace gsor {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// 2-D Dirichlet Laplacian on an m x m grid: I (x) Vm + Vm (x) I with
// Vm = h^{-2} tridiag(-1, 2, -1), h = 1/(m+1).
SparseMatrix laplacian2d(int m) {
  const double inv_h2 = static_cast<double>(m + 1) * static_cast<double>(m + 1);
  return kron_sum(tridiag(m, inv_h2));
}

// Positive definiteness of W is asserted when an instance is built so that
// bad configurations surface here and not inside a solver.
void assert_w_spd(const ProblemInstance& inst, const char* what) {
  try {
    factorize_spd(inst.W);
  } catch (const NotPositiveDefiniteError& e) {
    throw std::runtime_error("example " + std::to_string(inst.config.example) +
                             " generation: factorization of " + what + " failed: " + e.what());
  }
}

// p = (W - T) * ones, q = (W + T) * ones, i.e. b = (1 + i) * A * ones.
void ones_rhs(ProblemInstance& inst) {
  const std::size_t n = static_cast<std::size_t>(inst.n());
  std::vector<double> one(n, 1.0);
  const std::vector<double> w1 = inst.W.multiply(one);
  const std::vector<double> t1 = inst.T.multiply(one);
  inst.p.resize(n);
  inst.q.resize(n);
  kernels::lincomb(1.0, w1, -1.0, t1, inst.p);
  kernels::lincomb(1.0, w1, 1.0, t1, inst.q);
}

}  // namespace

ProblemInstance gen_example1(int m, double tau) {
  require(m >= 1, "example 1: m must be positive");
  require(std::isfinite(tau) && tau >= 0.0, "example 1: tau must be positive (or 0 for default)");
  const double h = 1.0 / (m + 1);
  if (tau == 0.0) tau = h;

  ProblemInstance inst;
  inst.config = {.example = 1, .m = m, .tau = tau};
  const SparseMatrix K = laplacian2d(m);
  const double h2 = h * h;
  inst.W = scaled(add_scaled_identity(K, (3.0 - std::sqrt(3.0)) / tau), h2);
  inst.T = scaled(add_scaled_identity(K, (3.0 + std::sqrt(3.0)) / tau), h2);

  const int n = m * m;
  inst.p.resize(static_cast<std::size_t>(n));
  inst.q.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const double v = h2 * j / (tau * (j + 1.0) * (j + 1.0));
    inst.p[static_cast<std::size_t>(j - 1)] = v;
    inst.q[static_cast<std::size_t>(j - 1)] = -v;
  }
  assert_w_spd(inst, "W");
  return inst;
}

ProblemInstance gen_example2(int m, double omega_drive, double mu_damp) {
  require(m >= 1, "example 2: m must be positive");
  require(std::isfinite(omega_drive) && omega_drive > 0.0,
          "example 2: omega_drive must be positive");
  require(std::isfinite(mu_damp) && mu_damp >= 0.0, "example 2: mu_damp must be nonnegative");
  const double h = 1.0 / (m + 1);
  const double h2 = h * h;

  ProblemInstance inst;
  inst.config = {.example = 2, .m = m, .omega_drive = omega_drive, .mu_damp = mu_damp};
  const SparseMatrix K = laplacian2d(m);
  inst.W = scaled(add_scaled_identity(K, -omega_drive * omega_drive), h2);
  inst.T = scaled(add_scaled_identity(scaled(K, mu_damp), 10.0 * omega_drive), h2);
  assert_w_spd(inst, "W = K - omega_drive^2 I");
  ones_rhs(inst);
  return inst;
}

ProblemInstance gen_example3(int m) {
  require(m >= 2, "example 3: m must be at least 2");

  const SparseMatrix V = tridiag(m, 1.0);
  const std::vector<Triplet> corner = {{0, m - 1, -1.0}, {m - 1, 0, -1.0}};
  const SparseMatrix Vc = add_rank_correction(V, corner);

  ProblemInstance inst;
  inst.config = {.example = 3, .m = m};
  inst.T = kron_sum(V);

  std::vector<Triplet> border;
  border.reserve(2 * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    border.push_back({i, (m - 1) * m + i, 9.0});
    border.push_back({(m - 1) * m + i, i, 9.0});
  }
  inst.W = add_rank_correction(scaled(kron_sum(Vc), 10.0), border);

  assert_w_spd(inst, "W");
  ones_rhs(inst);
  return inst;
}

ProblemInstance gen_example4(int m, double sigma1, double sigma2) {
  require(m >= 1, "example 4: m must be positive");
  require(std::isfinite(sigma1) && sigma1 >= 0.0, "example 4: sigma1 must be nonnegative");
  require(std::isfinite(sigma2) && sigma2 >= 0.0, "example 4: sigma2 must be nonnegative");
  const double h = 1.0 / (m + 1);
  const double h2 = h * h;

  ProblemInstance inst;
  inst.config = {.example = 4, .m = m, .sigma1 = sigma1, .sigma2 = sigma2};
  inst.W = scaled(add_scaled_identity(laplacian2d(m), sigma1), h2);
  inst.T = SparseMatrix::identity(m * m, h2 * sigma2);
  assert_w_spd(inst, "W");
  ones_rhs(inst);
  return inst;
}

ProblemInstance make_instance(const ProblemConfig& cfg) {
  switch (cfg.example) {
    case 1:
      return gen_example1(cfg.m, cfg.tau);
    case 2:
      return gen_example2(cfg.m, cfg.omega_drive, cfg.mu_damp);
    case 3:
      return gen_example3(cfg.m);
    case 4:
      return gen_example4(cfg.m, cfg.sigma1, cfg.sigma2);
    default:
      throw std::invalid_argument("make_instance: example must be 1..4, got " +
                                  std::to_string(cfg.example));
  }
}

void export_instance(const ProblemInstance& inst, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  mm_write(dir / "W.mtx", inst.W);
  mm_write(dir / "T.mtx", inst.T);
  vec_write(dir / "p.mtx", inst.p);
  vec_write(dir / "q.mtx", inst.q);
}

}  // namespace gsor
