// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_INT_LINALG_HPP
#define TSQ_INT_LINALG_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "tsq/integer.hpp"

namespace tsq {

// Dense integer matrix with exact arithmetic. Row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols);
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;
  void set_row(int i, const IntVec& v);
  void set_col(int j, const IntVec& v);

  IntMat transpose() const;
  Int max_abs_entry() const;

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Row vector times matrix.
IntVec vec_mat(const IntVec& v, const IntMat& m);
// Matrix times column vector.
IntVec mat_vec(const IntMat& m, const IntVec& v);

// Exact determinant: direct expansion for n <= 3, fraction-free Bareiss
// elimination beyond.
Int mat_det(const IntMat& m);

// Integer inverse of a matrix with |det| = 1, via the adjugate; throws
// not-unimodular otherwise.
IntMat mat_inv_unimodular(const IntMat& m);

// A^k for k >= 0.
IntMat mat_pow(const IntMat& m, unsigned k);

IntVec unit_vec(int n, int slot);

}  // namespace tsq

#endif  // TSQ_INT_LINALG_HPP
