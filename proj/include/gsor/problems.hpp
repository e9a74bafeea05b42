#pragma once

#include <filesystem>
#include <numbers>
#include <vector>

#include "gsor/sparse.hpp"

namespace gsor {

// Four built-in complex symmetric test systems (W + iT)(x + iy) = p + iq,
// posed on an m x m grid with n = m^2 unknowns (examples 1, 2 and 4 are
// finite-difference problems scaled by h^2 with h = 1/(m+1); example 3 is a
// bordered block system used as-is).
struct ProblemConfig {
  int example = 1;
  int m = 16;
  double tau = 0.0;  // example 1 time step; 0 selects the default h
  double omega_drive = std::numbers::pi;  // example 2 driving frequency
  double mu_damp = 0.02;                  // example 2 damping coefficient
  double sigma1 = 100.0;                  // example 4 real shift
  double sigma2 = 100.0;                  // example 4 imaginary shift
};

struct ProblemInstance {
  ProblemConfig config;
  SparseMatrix W;
  SparseMatrix T;
  std::vector<double> p;
  std::vector<double> q;

  int n() const { return W.size(); }
};

ProblemInstance gen_example1(int m, double tau = 0.0);
ProblemInstance gen_example2(int m, double omega_drive = std::numbers::pi, double mu_damp = 0.02);
ProblemInstance gen_example3(int m);
ProblemInstance gen_example4(int m, double sigma1 = 100.0, double sigma2 = 100.0);

ProblemInstance make_instance(const ProblemConfig& cfg);

/// Write W.mtx, T.mtx, p.mtx, q.mtx into the given directory (created if
/// missing).
void export_instance(const ProblemInstance& inst, const std::filesystem::path& dir);

}  // namespace gsor
