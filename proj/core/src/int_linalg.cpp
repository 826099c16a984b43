// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/int_linalg.hpp"

#include <sstream>

#include "tsq/error.hpp"

namespace tsq {

IntMat::IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::invalid_input, "negative matrix dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) fail(errc::invalid_input, "ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IntVec IntMat::col(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void IntMat::set_row(int i, const IntVec& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void IntMat::set_col(int j, const IntVec& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Int IntMat::max_abs_entry() const {
  Int m = 0;
  for (const Int& x : data_)
    if (abs(x) > m) m = abs(x);
  return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) fail(errc::invalid_input, "matrix product dimension mismatch");
  IntMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec vec_mat(const IntVec& v, const IntMat& m) {
  if (static_cast<int>(v.size()) != m.rows()) fail(errc::invalid_input, "vec*mat mismatch");
  IntVec r(m.cols(), Int(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
  return r;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
  if (static_cast<int>(v.size()) != m.cols()) fail(errc::invalid_input, "mat*vec mismatch");
  IntVec r(m.rows(), Int(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

namespace {

Int det_small(const IntMat& m) {
  switch (m.rows()) {
    case 0: return 1;
    case 1: return m.at(0, 0);
    case 2: return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    default:
      return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
             m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
             m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  }
}

Int det_bareiss(IntMat m) {
  const int n = m.rows();
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { pivot = i; break; }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace

Int mat_det(const IntMat& m) {
  if (!m.is_square()) fail(errc::invalid_input, "determinant of non-square matrix");
  if (m.rows() <= 3) return det_small(m);
  return det_bareiss(m);
}

IntMat mat_inv_unimodular(const IntMat& m) {
  if (!m.is_square()) fail(errc::invalid_input, "inverse of non-square matrix");
  Int d = mat_det(m);
  if (d != 1 && d != -1) fail(errc::not_unimodular, "determinant is " + d.get_str());
  const int n = m.rows();
  IntMat inv(n, n);
  // Adjugate: inv = adj(m) / det, entries are signed cofactors.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = m.at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = mat_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(j, i) = d == 1 ? cof : Int(-cof);
    }
  return inv;
}

IntMat mat_pow(const IntMat& m, unsigned k) {
  if (!m.is_square()) fail(errc::invalid_input, "power of non-square matrix");
  IntMat r = IntMat::identity(m.rows());
  IntMat base = m;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

IntVec unit_vec(int n, int slot) {
  IntVec v(n, Int(0));
  v[slot] = 1;
  return v;
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace tsq
