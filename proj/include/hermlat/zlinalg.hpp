#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermlat/bigint.hpp"

namespace hermlat {

using IntVector = std::vector<Int>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// U * input = echelon, U unimodular; rows of echelon at index >= rank are zero.
struct RowEchelon {
  IntMatrix echelon;
  IntMatrix transform;
  std::size_t rank = 0;
};

RowEchelon row_echelon(const IntMatrix& input);

// Basis of the Z-span of a set of vectors, in Hermite normal form: echelon
// rows with positive pivots, entries above each pivot reduced into [0, pivot).
class ZSpan {
 public:
  explicit ZSpan(std::size_t dim) : dim_(dim) {}

  void add(IntVector v);
  std::size_t dim() const { return dim_; }
  std::size_t rank() const;
  bool contains(IntVector v) const;
  // [Z^dim : span] when the span has full rank.
  std::optional<Int> index() const;
  // Rows of the reduced basis, ordered by pivot column.
  std::vector<IntVector> basis() const;

 private:
  std::size_t dim_;
  // pivots_[c] is the basis row whose leading entry sits in column c, if any.
  std::vector<std::optional<IntVector>> pivots_ = std::vector<std::optional<IntVector>>(dim_);
};

}  // namespace hermlat
