#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gsor/mmio.hpp"
#include "gsor/problems.hpp"
#include "gsor/sparse.hpp"

using gsor::ParseError;
using gsor::SparseMatrix;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "gsor-mmio-tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_text(const std::string& name, const std::string& body) {
  const fs::path p = scratch() / name;
  std::ofstream out(p);
  out << body;
  return p;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// returns the message of the ParseError that `fn` must throw
template <class F>
std::string parse_error_of(F&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  FAIL("expected a ParseError");
  return {};
}

}  // namespace

TEST_SUITE("mmio") {

TEST_CASE("matrix round trip preserves every bit") {
  const SparseMatrix W = gsor::gen_example1(4).W;
  const fs::path p = scratch() / "w.mtx";
  gsor::mm_write(p, W);
  const SparseMatrix R = gsor::mm_read(p);
  CHECK(R.size() == W.size());
  CHECK(R.row_start() == W.row_start());
  CHECK(R.col_index() == W.col_index());
  CHECK(R.values() == W.values());
}

TEST_CASE("round trip keeps extreme values") {
  const std::vector<gsor::Triplet> trips = {
      {0, 0, 1e-300}, {1, 1, 1.7976931348623157e308}, {0, 1, -3.0000000000000004}, {1, 0, -3.0000000000000004}};
  const SparseMatrix A = SparseMatrix::from_triplets(2, trips);
  const fs::path p = scratch() / "extreme.mtx";
  gsor::mm_write(p, A);
  CHECK(gsor::mm_read(p).values() == A.values());
}

TEST_CASE("vector round trip") {
  const std::vector<double> v = {0.0, -2.5, 1e-300, 0.1 + 0.2};
  const fs::path p = scratch() / "v.mtx";
  gsor::vec_write(p, v);
  CHECK(gsor::vec_read(p) == v);
}

TEST_CASE("rejects upper-triangle entries in symmetric files") {
  const fs::path p = write_text("upper.mtx",
                                "%%MatrixMarket matrix coordinate real symmetric\n"
                                "2 2 2\n"
                                "1 1 1.0\n"
                                "1 2 0.5\n");
  const std::string msg = parse_error_of([&] { gsor::mm_read(p); });
  CHECK(contains(msg, "line 4"));
  CHECK(contains(msg, "upper"));
}

TEST_CASE("rejects duplicate entries") {
  const fs::path p = write_text("dup.mtx",
                                "%%MatrixMarket matrix coordinate real symmetric\n"
                                "3 3 3\n"
                                "1 1 1.0\n"
                                "2 1 0.5\n"
                                "2 1 0.5\n");
  const std::string msg = parse_error_of([&] { gsor::mm_read(p); });
  CHECK(contains(msg, "duplicate"));
}

TEST_CASE("general files must be numerically symmetric") {
  const fs::path good = write_text("gen-ok.mtx",
                                   "%%MatrixMarket matrix coordinate real general\n"
                                   "2 2 4\n"
                                   "1 1 2.0\n"
                                   "1 2 -1.0\n"
                                   "2 1 -1.0\n"
                                   "2 2 2.0\n");
  const SparseMatrix A = gsor::mm_read(good);
  CHECK(A.value_at(0, 1) == -1.0);
  CHECK(A.nonzeros() == 4);

  const fs::path bad = write_text("gen-bad.mtx",
                                  "%%MatrixMarket matrix coordinate real general\n"
                                  "2 2 4\n"
                                  "1 1 2.0\n"
                                  "1 2 -1.0\n"
                                  "2 1 -0.5\n"
                                  "2 2 2.0\n");
  const std::string msg = parse_error_of([&] { gsor::mm_read(bad); });
  CHECK(contains(msg, "not symmetric"));
}

TEST_CASE("rejects unsupported banners") {
  const fs::path p = write_text("banner.mtx",
                                "%%MatrixMarket matrix coordinate complex symmetric\n"
                                "1 1 1\n"
                                "1 1 1.0\n");
  const std::string msg = parse_error_of([&] { gsor::mm_read(p); });
  CHECK(contains(msg, "line 1"));
}

TEST_CASE("rejects non-square sizes") {
  const fs::path p = write_text("rect.mtx",
                                "%%MatrixMarket matrix coordinate real symmetric\n"
                                "2 3 1\n"
                                "1 1 1.0\n");
  CHECK(contains(parse_error_of([&] { gsor::mm_read(p); }), "square"));
}

TEST_CASE("rejects trailing data") {
  const fs::path p = write_text("trail.mtx",
                                "%%MatrixMarket matrix coordinate real symmetric\n"
                                "2 2 1\n"
                                "1 1 1.0\n"
                                "2 2 1.0\n");
  CHECK(contains(parse_error_of([&] { gsor::mm_read(p); }), "trailing"));
}

TEST_CASE("rejects out-of-range indices") {
  const fs::path p = write_text("range.mtx",
                                "%%MatrixMarket matrix coordinate real symmetric\n"
                                "2 2 1\n"
                                "3 1 1.0\n");
  CHECK(contains(parse_error_of([&] { gsor::mm_read(p); }), "out of range"));
}

TEST_CASE("drops explicit zeros") {
  const fs::path p = write_text("zero.mtx",
                                "%%MatrixMarket matrix coordinate real symmetric\n"
                                "2 2 3\n"
                                "1 1 1.0\n"
                                "2 1 0.0\n"
                                "2 2 1.0\n");
  CHECK(gsor::mm_read(p).nonzeros() == 2);
}

TEST_CASE("missing files raise ParseError") {
  CHECK_THROWS_AS(gsor::mm_read(scratch() / "does-not-exist.mtx"), ParseError);
  CHECK_THROWS_AS(gsor::vec_read(scratch() / "does-not-exist.mtx"), ParseError);
}

TEST_CASE("vec_read checks the banner and shape") {
  const fs::path p = write_text("vb.mtx",
                                "%%MatrixMarket matrix coordinate real general\n"
                                "2 1 2\n");
  CHECK_THROWS_AS(gsor::vec_read(p), ParseError);

  const fs::path wide = write_text("wide.mtx",
                                   "%%MatrixMarket matrix array real general\n"
                                   "2 2\n"
                                   "1.0\n1.0\n1.0\n1.0\n");
  CHECK(contains(parse_error_of([&] { gsor::vec_read(wide); }), "single column"));
}

}  // TEST_SUITE
