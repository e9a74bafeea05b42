#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsor/problems.hpp"
#include "gsor/sparse.hpp"

// Randomized property checks used by the CLI `verify` subcommand and the
// acceptance suite. All randomness flows from the caller's seed, so a report
// is reproducible.
namespace gsor::verify {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> notes;  // one per failure

  bool pass() const { return failures == 0; }
};

/// Sorted eigenvalues of (omega*W + T)^{-1} (omega*T - W) equal the mapped
/// eigenvalues (omega*mu - 1)/(omega + mu) of W^{-1} T (dense oracle).
PropertyResult check_eigen_map(std::uint64_t seed, int trials);

/// The optimized scaled iteration always satisfies alpha* in (0.828, 1],
/// predicted rho < (sqrt(2)-1)/(sqrt(2)+1), and a dense-oracle spectral
/// radius of the scaled system below 1.
PropertyResult check_parameter_bounds(std::uint64_t seed, int trials);

/// Running the scaled-system solver directly equals scaling the problem
/// first and running the plain solver, iterate for iterate.
PropertyResult check_scaling_equivalence(std::uint64_t seed, int trials);

/// The plain iteration converges for alpha below 2/(1 + mu) and diverges
/// above it (diagonal model problems with known mu).
PropertyResult check_convergence_boundary(std::uint64_t seed, int trials);

std::vector<PropertyResult> run_all(std::uint64_t seed, int trials);

// Random test-matrix helpers (dense patterns stored sparse), also used by
// the acceptance suite.
SparseMatrix random_spd(int n, std::mt19937_64& eng);
SparseMatrix random_psd(int n, int rank, std::mt19937_64& eng);
ProblemInstance random_instance(int n, int rank, std::mt19937_64& eng);

}  // namespace gsor::verify
