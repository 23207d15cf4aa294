#ifndef SYMPOW_LINALG_HPP
#define SYMPOW_LINALG_HPP

#include <cstddef>
#include <vector>

#include "sympow/field.hpp"

namespace sympow {

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Field& f)
      : rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void append_row(const std::vector<Scalar>& row);
  std::vector<Scalar> row(std::size_t r) const;
  Matrix transposed(const Field& f) const;

  bool operator==(const Matrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m, const Field& f);

// Basis of the right null space; size cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m, const Field& f);

// Incremental row-space accumulator kept in reduced row echelon form.
// Used wherever a span of many candidate vectors is grown rank-by-rank.
class SpanBuilder {
 public:
  SpanBuilder(std::size_t cols, const Field& f) : cols_(cols), field_(f) {}

  // Returns true when the row enlarged the span.
  bool add(std::vector<Scalar> row);
  // Reduces a copy of `row` against the current basis; true iff it lands in
  // the span.
  bool contains(std::vector<Scalar> row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::vector<Scalar>>& basis() const { return rows_; }
  // Rows sorted by pivot column (canonical rref of the span).
  std::vector<std::vector<Scalar>> canonical_basis() const;

 private:
  void reduce(std::vector<Scalar>& row) const;
  std::size_t cols_;
  Field field_;
  std::vector<std::vector<Scalar>> rows_;   // each normalized, in rref
  std::vector<std::size_t> pivots_;
};

}  // namespace sympow

#endif
