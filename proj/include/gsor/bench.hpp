#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gsor/problems.hpp"
#include "gsor/spectral.hpp"

namespace gsor::bench {

struct BenchRow {
  int example = 0;
  int m = 0;
  std::string method;
  double alpha = 0.0;
  std::optional<double> omega;
  int iterations = 0;
  bool converged = false;
  double final_residual = 0.0;
  std::optional<double> predicted_rho;
  std::optional<double> observed_rho;
  double seconds = 0.0;  // wall time of the solve; not serialized
};

/// Exact CSV column set, also used to validate files on read.
std::string csv_header();

void write_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows);
std::vector<BenchRow> read_csv(const std::filesystem::path& path);

bool method_known(const std::string& method);

/// Pre-tuned MHSS alpha for the standard grids (m in {16, 32, 64, 128, 256});
/// empty for any other (example, m).
std::optional<double> mhss_table_alpha(int example, int m);

struct RunSpec {
  ProblemConfig config;
  std::string method = "gsor";
  std::optional<double> alpha;  // resolved from the spectrum when absent
  std::optional<double> omega;
  double tol = 1e-6;
  int max_iter = 10000;
  PowerOpts power;
  bool force_mu_min_zero = false;
};

/// Build the instance, resolve parameters, run the chosen method.
/// predicted_rho is filled only when the parameters came from the optimizer,
/// observed_rho only when the run allows it (converged, six residuals).
BenchRow run_one(const RunSpec& spec);

struct BenchOutput {
  std::vector<BenchRow> rows;
  std::vector<std::string> errors;  // one message per failed run
};

/// Cartesian sweep in deterministic (example, grid, method) order.
/// Individual failures produce converged=false rows and the sweep continues.
BenchOutput run_bench(const std::vector<int>& examples, const std::vector<int>& grids,
                      const std::vector<std::string>& methods, double tol, int max_iter,
                      int grid_cap = 256);

}  // namespace gsor::bench
