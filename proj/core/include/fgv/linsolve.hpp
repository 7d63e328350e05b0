#pragma once

#include <cstddef>
#include <vector>

#include "fgv/rational.hpp"

namespace fgv {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct LinearSolution {
  bool consistent = false;
  /// Solution with every free (non-pivot) unknown set to zero. Empty when
  /// the system is inconsistent.
  std::vector<Rational> values;
  std::vector<std::size_t> pivot_columns;
};

/// Solves A x = b exactly. Rows are scaled to integers and reduced by
/// fraction-free (Bareiss) elimination; pivots are taken column by column in
/// the given column order, the first row with a nonzero entry winning, so the
/// pivot set is the leftmost maximal independent set of columns.
LinearSolution solve_fraction_free(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace fgv
