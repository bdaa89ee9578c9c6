#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "supercoinv/polynomial.hpp"

namespace supercoinv {

// Sparse vector over Q: (column, value) pairs, columns strictly increasing,
// no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental row echelon form over Q with fraction-free elimination.
///
/// Rows are stored as primitive integer vectors keyed by their leading
/// column. Only the leading entry of an incoming row is eliminated at each
/// step (semi-echelon form), which is all rank computations need.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols);

  // Adds the row if it is independent of the rows inserted so far.
  bool insert(const SparseVector& row);
  bool in_span(const SparseVector& row) const;

  std::size_t rank() const { return rank_; }
  std::size_t ncols() const { return pivots_.size(); }
  bool full() const { return rank_ == pivots_.size(); }

 private:
  using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;
  IntRow reduce(IntRow row) const;

  std::vector<IntRow> pivots_;  // empty row = no pivot in that column
  std::size_t rank_ = 0;
};

std::size_t rank(const std::vector<SparseVector>& rows, std::size_t ncols);

// Determinant of a square matrix of polynomials by cofactor expansion with
// memoized minors (exponential in the size; intended for n <= 8).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix);

}  // namespace supercoinv
