#include "gsor/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gsor/mmio.hpp"
#include "gsor/solvers.hpp"

namespace gsor::bench {

namespace {

constexpr const char* kHeader =
    "example,m,method,alpha,omega,iterations,converged,final_residual,predicted_rho,observed_rho";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

double parse_double(const std::string& s, const std::filesystem::path& path, std::size_t line) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ParseError(path.string() + ": line " + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

const double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

std::string csv_header() { return kHeader; }

void write_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
  out << kHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.example << ',' << r.m << ',' << r.method << ',' << fmt(r.alpha) << ','
        << fmt_opt(r.omega) << ',' << r.iterations << ',' << (r.converged ? "true" : "false")
        << ',' << fmt(r.final_residual) << ',' << fmt_opt(r.predicted_rho) << ','
        << fmt_opt(r.observed_rho) << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path.string());
}

std::vector<BenchRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("read_csv: cannot open " + path.string());
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");
  ++lineno;
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  if (line != kHeader)
    throw ParseError(path.string() + ": line 1: unexpected header '" + line + "'");

  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.push_back("");
    if (f.size() != 10)
      throw ParseError(path.string() + ": line " + std::to_string(lineno) + ": expected 10 fields, got " +
                       std::to_string(f.size()));
    BenchRow r;
    r.example = static_cast<int>(parse_double(f[0], path, lineno));
    r.m = static_cast<int>(parse_double(f[1], path, lineno));
    r.method = f[2];
    r.alpha = parse_double(f[3], path, lineno);
    if (!f[4].empty()) r.omega = parse_double(f[4], path, lineno);
    r.iterations = static_cast<int>(parse_double(f[5], path, lineno));
    if (f[6] == "true")
      r.converged = true;
    else if (f[6] == "false")
      r.converged = false;
    else
      throw ParseError(path.string() + ": line " + std::to_string(lineno) + ": bad flag '" + f[6] + "'");
    r.final_residual = parse_double(f[7], path, lineno);
    if (!f[8].empty()) r.predicted_rho = parse_double(f[8], path, lineno);
    if (!f[9].empty()) r.observed_rho = parse_double(f[9], path, lineno);
    rows.push_back(std::move(r));
  }
  return rows;
}

bool method_known(const std::string& method) {
  return method == "gsor" || method == "pgsor" || method == "pgsor-approx" || method == "mhss";
}

std::optional<double> mhss_table_alpha(int example, int m) {
  struct Entry {
    int m;
    double alpha[4];  // examples 1..4
  };
  static constexpr Entry kTable[] = {
      {16, {1.06, 0.21, 1.61, 0.37}},   {32, {0.75, 0.08, 1.01, 0.09}},
      {64, {0.54, 0.04, 0.53, 0.021}},  {128, {0.40, 0.02, 0.26, 0.005}},
      {256, {0.30, 0.01, 0.13, 0.002}},
  };
  if (example < 1 || example > 4) return std::nullopt;
  for (const Entry& e : kTable)
    if (e.m == m) return e.alpha[example - 1];
  return std::nullopt;
}

BenchRow run_one(const RunSpec& spec) {
  if (!method_known(spec.method))
    throw std::invalid_argument("run_one: unknown method '" + spec.method + "'");

  const ProblemInstance inst = make_instance(spec.config);

  BenchRow row;
  row.example = spec.config.example;
  row.m = spec.config.m;
  row.method = spec.method;

  SolverSettings settings;
  settings.tol = spec.tol;
  settings.max_iter = spec.max_iter;

  SolveResult result;
  if (spec.method == "gsor") {
    if (spec.alpha) {
      settings.alpha = *spec.alpha;
    } else {
      const SpectralEstimate est =
          estimate_spectrum(inst.W, inst.T, spec.power, spec.force_mu_min_zero);
      const ParamChoice pc = gsor_optimal_alpha(est.mu_max);
      settings.alpha = pc.alpha;
      row.predicted_rho = pc.predicted_rho;
    }
    result = gsor_solve(inst, settings);
  } else if (spec.method == "pgsor") {
    if (spec.alpha && spec.omega) {
      settings.alpha = *spec.alpha;
      settings.omega = *spec.omega;
    } else {
      const SpectralEstimate est =
          estimate_spectrum(inst.W, inst.T, spec.power, spec.force_mu_min_zero);
      if (spec.omega) {
        // honor the given omega and tune alpha for it
        settings.omega = *spec.omega;
        const ParamChoice pc = gsor_optimal_alpha(rho_S_tilde(*spec.omega, est));
        settings.alpha = spec.alpha ? *spec.alpha : pc.alpha;
        if (!spec.alpha) row.predicted_rho = pc.predicted_rho;
      } else {
        const ParamChoice pc = pgsor_optimal_params(est);
        settings.omega = *pc.omega;
        settings.alpha = spec.alpha ? *spec.alpha : pc.alpha;
        if (!spec.alpha) row.predicted_rho = pc.predicted_rho;
      }
    }
    result = pgsor_solve(inst, settings);
  } else if (spec.method == "pgsor-approx") {
    const ParamChoice pc = approx_params();
    settings.alpha = pc.alpha;
    settings.omega = pc.omega;
    row.predicted_rho = pc.predicted_rho;
    result = pgsor_solve(inst, settings);
  } else {  // mhss
    if (spec.alpha) {
      settings.alpha = *spec.alpha;
    } else {
      const auto a = mhss_table_alpha(spec.config.example, spec.config.m);
      if (!a)
        throw std::invalid_argument("mhss: no tabulated alpha for example " +
                                    std::to_string(spec.config.example) + " at m = " +
                                    std::to_string(spec.config.m) + "; pass --alpha");
      settings.alpha = *a;
    }
    result = mhss_solve(inst, settings);
  }

  row.alpha = result.report.settings.alpha;
  row.omega = result.report.settings.omega;
  row.iterations = result.report.iterations;
  row.converged = result.report.converged;
  row.final_residual = result.report.residual_history.back();
  row.seconds = result.report.seconds;
  if (result.report.converged && result.report.residual_history.size() >= 6)
    row.observed_rho = observed_convergence_factor(result.report);
  return row;
}

BenchOutput run_bench(const std::vector<int>& examples, const std::vector<int>& grids,
                      const std::vector<std::string>& methods, double tol, int max_iter,
                      int grid_cap) {
  if (examples.empty()) throw std::invalid_argument("run_bench: empty example list");
  if (grids.empty()) throw std::invalid_argument("run_bench: empty grid list");
  if (methods.empty()) throw std::invalid_argument("run_bench: empty method list");
  for (int e : examples)
    if (e < 1 || e > 4)
      throw std::invalid_argument("run_bench: example must be 1..4, got " + std::to_string(e));
  for (int g : grids) {
    if (g < 1) throw std::invalid_argument("run_bench: grid must be positive");
    if (g > grid_cap)
      throw std::invalid_argument("run_bench: grid " + std::to_string(g) +
                                  " exceeds the cap of " + std::to_string(grid_cap));
  }
  for (const std::string& m : methods)
    if (!method_known(m)) throw std::invalid_argument("run_bench: unknown method '" + m + "'");

  std::vector<RunSpec> specs;
  for (int e : examples)
    for (int g : grids)
      for (const std::string& m : methods) {
        RunSpec s;
        s.config.example = e;
        s.config.m = g;
        s.method = m;
        s.tol = tol;
        s.max_iter = max_iter;
        specs.push_back(std::move(s));
      }

  BenchOutput out;
  out.rows.resize(specs.size());
  std::vector<std::string> errs(specs.size());
  const std::int64_t count = static_cast<std::int64_t>(specs.size());
  // runs are independent; row order stays deterministic because each run
  // writes only its own slot
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    const RunSpec& s = specs[static_cast<std::size_t>(i)];
    try {
      out.rows[static_cast<std::size_t>(i)] = run_one(s);
    } catch (const std::exception& e) {
      BenchRow row;
      row.example = s.config.example;
      row.m = s.config.m;
      row.method = s.method;
      row.alpha = kNan;
      row.converged = false;
      row.final_residual = kNan;
      out.rows[static_cast<std::size_t>(i)] = std::move(row);
      errs[static_cast<std::size_t>(i)] = "example " + std::to_string(s.config.example) + " m " +
                                          std::to_string(s.config.m) + " " + s.method + ": " +
                                          e.what();
    }
  }
  for (std::string& e : errs)
    if (!e.empty()) out.errors.push_back(std::move(e));
  return out;
}

}  // namespace gsor::bench
