#ifndef BDM_MATRIX_HPP
#define BDM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bdm/numeric.hpp"

namespace bdm {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(size_t i) const;
  IntVec col(size_t j) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  RatVec operator*(const RatVec& v) const;

  /// Submatrix with the given columns (in the given order).
  IntMatrix select_cols(const std::vector<size_t>& cols) const;

  static IntMatrix from_rows(const std::vector<IntVec>& rows, size_t ncols);

  bool operator==(const IntMatrix& o) const = default;

 private:
  size_t rows_, cols_;
  std::vector<Int> data_;
};

/// Dense rational matrix; used internally for exact solves.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  RatVec operator*(const RatVec& v) const;

  static RatMatrix from_cols(const std::vector<RatVec>& cols, size_t nrows);

  bool operator==(const RatMatrix& o) const = default;

 private:
  size_t rows_, cols_;
  std::vector<Rat> data_;
};

Int det(const IntMatrix& m);      // square only
size_t rank(const IntMatrix& m);  // rank over Q

}  // namespace bdm

#endif
