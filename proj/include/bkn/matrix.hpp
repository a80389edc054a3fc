#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkn/rational.hpp"

namespace bkn {

// Dense matrix over the rationals with id labels on rows and columns.
struct RatMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Rat> entries;  // row-major

  RatMatrix() = default;
  RatMatrix(std::vector<std::string> rows, std::vector<std::string> cols);
  static RatMatrix square(std::vector<std::string> labels);

  int rows() const { return static_cast<int>(row_labels.size()); }
  int cols() const { return static_cast<int>(col_labels.size()); }
  Rat& at(int i, int j) { return entries[static_cast<std::size_t>(i) * col_labels.size() + j]; }
  const Rat& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * col_labels.size() + j];
  }

  bool is_symmetric() const;
  bool is_zero() const;
};

struct RatVector {
  std::vector<std::string> labels;
  std::vector<Rat> values;

  int size() const { return static_cast<int>(values.size()); }
};

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  bool operator==(const Inertia&) const = default;
};

// Exact basis of the null space { x | m x = 0 }; empty iff m is injective.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

// A kernel vector with every entry nonzero, if one exists. Existence is
// equivalent to no coordinate vanishing on the whole kernel; the vector is
// built as sum(t^i * basis[i]) for the smallest positive integer t that
// avoids the finitely many excluded values per coordinate.
std::optional<RatVector> nowhere_zero_kernel_vector(const RatMatrix& m);

// Exact signature of a symmetric matrix via a pivoted LDL^T-style
// congruence (1x1 pivots, 2x2 pivots when the remaining diagonal is zero).
// Throws std::invalid_argument on non-symmetric input.
Inertia inertia(const RatMatrix& m);

// Rows and columns restricted to `keep` (label order preserved).
// Throws std::invalid_argument on an empty or unknown subset.
RatMatrix principal_submatrix(const RatMatrix& m, const std::vector<std::string>& keep);

// m x, exact.
std::vector<Rat> matrix_apply(const RatMatrix& m, const std::vector<Rat>& x);

}  // namespace bkn
