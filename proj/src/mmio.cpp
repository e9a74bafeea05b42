#include "gsor/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace gsor {

namespace {

constexpr const char* kCoordBanner = "%%MatrixMarket matrix coordinate real";
constexpr const char* kArrayBanner = "%%MatrixMarket matrix array real general";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line, const std::string& msg) {
  throw ParseError(path.string() + ": line " + std::to_string(line) + ": " + msg);
}

struct LineReader {
  std::ifstream in;
  std::filesystem::path path;
  std::size_t lineno = 0;

  explicit LineReader(const std::filesystem::path& p) : in(p), path(p) {
    if (!in) throw ParseError(p.string() + ": cannot open file");
  }

  /// Next non-comment, non-blank line; false at end of file.
  bool next(std::string& out, bool skip_comments = true) {
    std::string s;
    while (std::getline(in, s)) {
      ++lineno;
      const auto pos = s.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (skip_comments && s[pos] == '%') continue;
      out = s;
      return true;
    }
    return false;
  }
};

bool parse_int(std::istringstream& ss, long long& out) {
  return static_cast<bool>(ss >> out);
}

bool line_done(std::istringstream& ss) {
  std::string rest;
  return !(ss >> rest);
}

std::string read_banner(LineReader& r) {
  std::string banner;
  // banner must be the very first line
  if (!std::getline(r.in, banner)) fail(r.path, 1, "empty file");
  r.lineno = 1;
  while (!banner.empty() && (banner.back() == '\r' || banner.back() == '\n')) banner.pop_back();
  if (banner.rfind("%%MatrixMarket", 0) != 0) fail(r.path, 1, "missing MatrixMarket banner");
  return banner;
}

}  // namespace

void mm_write(const std::filesystem::path& path, const SparseMatrix& A) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("mm_write: cannot open " + path.string());
  std::int64_t lower = 0;
  const auto& rs = A.row_start();
  const auto& ci = A.col_index();
  for (int i = 0; i < A.size(); ++i)
    for (std::int64_t k = rs[i]; k < rs[i + 1] && ci[static_cast<std::size_t>(k)] <= i; ++k)
      ++lower;
  out << kCoordBanner << " symmetric\n";
  out << A.size() << ' ' << A.size() << ' ' << lower << '\n';
  const auto& v = A.values();
  for (int i = 0; i < A.size(); ++i)
    for (std::int64_t k = rs[i]; k < rs[i + 1] && ci[static_cast<std::size_t>(k)] <= i; ++k)
      out << (i + 1) << ' ' << (ci[static_cast<std::size_t>(k)] + 1) << ' '
          << fmt(v[static_cast<std::size_t>(k)]) << '\n';
  if (!out) throw std::runtime_error("mm_write: write failed for " + path.string());
}

SparseMatrix mm_read(const std::filesystem::path& path) {
  LineReader r(path);
  const std::string banner = read_banner(r);

  std::istringstream bs(banner);
  std::string tag, object, format, field, symmetry;
  bs >> tag >> object >> format >> field >> symmetry;
  if (object != "matrix") fail(path, 1, "unsupported object '" + object + "'");
  if (format != "coordinate")
    fail(path, 1, "unsupported format '" + format + "' (expected coordinate)");
  if (field != "real") fail(path, 1, "unsupported field '" + field + "' (expected real)");
  const bool symmetric = symmetry == "symmetric";
  if (!symmetric && symmetry != "general")
    fail(path, 1, "unsupported symmetry '" + symmetry + "'");

  std::string line;
  if (!r.next(line)) fail(path, r.lineno + 1, "missing size line");
  long long rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream ss(line);
    if (!parse_int(ss, rows) || !parse_int(ss, cols) || !parse_int(ss, nnz) || !line_done(ss))
      fail(path, r.lineno, "malformed size line");
  }
  if (rows != cols) fail(path, r.lineno, "matrix is not square");
  if (rows < 1) fail(path, r.lineno, "dimension must be positive");
  if (nnz < 0) fail(path, r.lineno, "negative entry count");
  const int n = static_cast<int>(rows);

  struct Entry {
    int row, col;
    double value;
    std::size_t line;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(nnz));
  for (long long e = 0; e < nnz; ++e) {
    if (!r.next(line)) fail(path, r.lineno + 1, "unexpected end of file (expected " +
                                                    std::to_string(nnz) + " entries)");
    std::istringstream ss(line);
    long long i = 0, j = 0;
    double v = 0.0;
    if (!parse_int(ss, i) || !parse_int(ss, j) || !(ss >> v) || !line_done(ss))
      fail(path, r.lineno, "malformed entry");
    if (i < 1 || i > n || j < 1 || j > n) fail(path, r.lineno, "index out of range");
    if (symmetric && j > i) fail(path, r.lineno, "upper-triangle entry in symmetric file");
    entries.push_back({static_cast<int>(i) - 1, static_cast<int>(j) - 1, v, r.lineno});
  }
  if (r.next(line)) fail(path, r.lineno, "trailing data after " + std::to_string(nnz) + " entries");

  // duplicate positions are rejected rather than summed
  {
    std::vector<const Entry*> order(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) order[k] = &entries[k];
    std::sort(order.begin(), order.end(), [](const Entry* a, const Entry* b) {
      if (a->row != b->row) return a->row < b->row;
      return a->col < b->col;
    });
    for (std::size_t k = 1; k < order.size(); ++k)
      if (order[k]->row == order[k - 1]->row && order[k]->col == order[k - 1]->col)
        fail(path, order[k]->line, "duplicate entry");
  }

  if (!symmetric) {
    // general header: accept only when numerically symmetric
    std::vector<Entry> sorted = entries;
    std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
      if (a.row != b.row) return a.row < b.row;
      return a.col < b.col;
    });
    auto find = [&](int i, int j) -> const Entry* {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), std::pair<int, int>{i, j},
                                 [](const Entry& e, const std::pair<int, int>& key) {
                                   if (e.row != key.first) return e.row < key.first;
                                   return e.col < key.second;
                                 });
      if (it == sorted.end() || it->row != i || it->col != j) return nullptr;
      return &*it;
    };
    for (const Entry& e : entries) {
      const Entry* m = find(e.col, e.row);
      if (m == nullptr || m->value != e.value)
        fail(path, e.line, "general matrix is not symmetric at (" + std::to_string(e.row + 1) +
                               ", " + std::to_string(e.col + 1) + ")");
    }
  }

  std::vector<Triplet> trips;
  trips.reserve(entries.size() * 2);
  for (const Entry& e : entries) {
    if (e.value == 0.0) continue;
    trips.push_back({e.row, e.col, e.value});
    if (symmetric && e.row != e.col) trips.push_back({e.col, e.row, e.value});
  }
  return SparseMatrix::from_triplets(n, trips);
}

void vec_write(const std::filesystem::path& path, std::span<const double> v) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("vec_write: cannot open " + path.string());
  out << kArrayBanner << '\n' << v.size() << " 1\n";
  for (double x : v) out << fmt(x) << '\n';
  if (!out) throw std::runtime_error("vec_write: write failed for " + path.string());
}

std::vector<double> vec_read(const std::filesystem::path& path) {
  LineReader r(path);
  const std::string banner = read_banner(r);
  if (banner.rfind(kArrayBanner, 0) != 0)
    fail(path, 1, "expected '" + std::string(kArrayBanner) + "'");

  std::string line;
  if (!r.next(line)) fail(path, r.lineno + 1, "missing size line");
  long long rows = 0, cols = 0;
  {
    std::istringstream ss(line);
    if (!parse_int(ss, rows) || !parse_int(ss, cols) || !line_done(ss))
      fail(path, r.lineno, "malformed size line");
  }
  if (cols != 1) fail(path, r.lineno, "expected a single column");
  if (rows < 0) fail(path, r.lineno, "negative dimension");

  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(rows));
  for (long long i = 0; i < rows; ++i) {
    if (!r.next(line)) fail(path, r.lineno + 1, "unexpected end of file");
    std::istringstream ss(line);
    double x = 0.0;
    if (!(ss >> x) || !line_done(ss)) fail(path, r.lineno, "malformed value");
    v.push_back(x);
  }
  if (r.next(line)) fail(path, r.lineno, "trailing data");
  return v;
}

}  // namespace gsor
