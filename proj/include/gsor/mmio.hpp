#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "gsor/sparse.hpp"

namespace gsor {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Write A in Matrix Market coordinate format (real, symmetric, 1-based,
/// lower triangle only). Values keep full precision.
void mm_write(const std::filesystem::path& path, const SparseMatrix& A);

/// Read a Matrix Market file. "symmetric" files are mirrored; "general"
/// files are accepted only when they are numerically symmetric. Explicit
/// zeros are dropped. Errors carry the offending line number.
SparseMatrix mm_read(const std::filesystem::path& path);

/// Dense vector I/O in Matrix Market array format (n x 1).
void vec_write(const std::filesystem::path& path, std::span<const double> v);
std::vector<double> vec_read(const std::filesystem::path& path);

}  // namespace gsor
