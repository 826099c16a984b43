// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/unimodular.hpp"

#include <algorithm>

#include "tsq/error.hpp"

namespace tsq {

namespace {

void require_coprime(const IntVec& p) {
  if (p.size() < 2) fail(errc::invalid_input, "tuple needs length >= 2");
  if (gcd_all(p) != 1) fail(errc::invalid_input, "tuple is not coprime");
}

Int prod_range(const IntVec& v, int from, int to) {  // inclusive 0-indexed, empty -> 1
  Int r = 1;
  for (int i = from; i <= to; ++i) r *= v[i];
  return r;
}

// Column-relation target: column 0 is zero, column k holds -p_k in slot 0
// and p_0 in slot k.
IntMat relation_target(const IntVec& p) {
  const int n = static_cast<int>(p.size());
  IntMat t(n, n);
  for (int k = 1; k < n; ++k) {
    t.at(0, k) = -p[k];
    t.at(k, k) = p[0];
  }
  return t;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Int completion_bound(const IntVec& p) {
  const int n = static_cast<int>(p.size());
  Int scale = 1;
  if (n > 2) scale = pow_int(2, static_cast<unsigned long>(n - 2));
  return scale * max_abs(p);
}

IntMat bezout_matrix_2d(const Int& p, const Int& q) {
  if (p == 0 && q == 0) fail(errc::invalid_input, "zero tuple");
  BezoutTriple bz = ext_gcd(p, q);
  if (bz.g != 1) fail(errc::invalid_input, "pair is not coprime");
  IntMat a(2, 2);
  a.at(0, 0) = bz.s;
  a.at(0, 1) = -q;
  a.at(1, 0) = bz.t;
  a.at(1, 1) = p;
  return a;
}

BprimeResult build_bprime(const IntVec& p) {
  require_coprime(p);
  const int n = static_cast<int>(p.size());
  if (n < 3) fail(errc::invalid_input, "build_bprime needs n >= 3");
  if (p[0] == 0) fail(errc::invalid_input, "leading entry must be nonzero");

  // Prefix gcds G_k = gcd(p_0..p_{k-1}); coprimality gives G_n = 1.
  IntVec prefix_gcd(n + 1);
  prefix_gcd[0] = 0;
  for (int k = 1; k <= n; ++k) {
    prefix_gcd[k] = prefix_gcd[k - 1];
    mpz_gcd(prefix_gcd[k].get_mpz_t(), prefix_gcd[k].get_mpz_t(), p[k - 1].get_mpz_t());
  }

  CompletionAux aux;
  aux.d.resize(n - 2);
  for (int i = 0; i < n - 2; ++i) aux.d[i] = prefix_gcd[i + 2] / prefix_gcd[i + 3];
  aux.b.resize(n);
  aux.b[0] = p[0] / prefix_gcd[2];
  aux.b[1] = p[1] / prefix_gcd[2];
  for (int i = 2; i < n; ++i) aux.b[i] = p[i] / prefix_gcd[i + 1];
  aux.m.resize(n);
  aux.t.resize(n - 2);

  BezoutTriple head = ext_gcd(aux.b[0], aux.b[1]);
  if (head.g != 1) fail(errc::internal_error, "reduced leading pair not coprime");
  aux.m[0] = head.s;
  aux.m[1] = head.t;
  for (int i = 0; i < n - 2; ++i) {
    BezoutTriple bz = ext_gcd(aux.d[i], aux.b[i + 2]);
    if (bz.g != 1) fail(errc::internal_error, "gcd chain broke coprimality");
    aux.t[i] = bz.s;
    aux.m[i + 2] = bz.t;
  }

  IntMat bprime(n, n);
  bprime.set_row(0, p);
  bprime.at(1, 0) = -aux.m[1];
  bprime.at(1, 1) = aux.m[0];
  for (int row = 2; row < n; ++row) {
    // Row r: entries left of the diagonal carry -m_r b_c scaled by the
    // d-product over [max(c-1, 0), row-3]; the diagonal carries t_{row-2}.
    for (int col = 0; col < row; ++col) {
      int from = std::max(col - 1, 0);
      Int dp = prod_range(aux.d, from, row - 3);
      bprime.at(row, col) = -aux.m[row] * aux.b[col] * dp;
    }
    bprime.at(row, row) = aux.t[row - 2];
  }

  // Determinant telescope: the leading k x k minor equals G_k.
  for (int k = 2; k <= n; ++k) {
    IntMat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = bprime.at(i, j);
    if (mat_det(lead) != prefix_gcd[k])
      fail(errc::internal_error, "determinant telescope broke at stage " + std::to_string(k));
  }
  return {std::move(bprime), std::move(aux)};
}

IntMat base_solution(const IntMat& bprime, const CompletionAux& aux, const IntVec& p) {
  const int n = bprime.rows();
  // Closed-form assembly.
  IntMat base(n, n);
  for (int row = 0; row < n; ++row) {
    int from = std::max(row - 1, 0);
    base.at(row, 0) = aux.m[row] * prod_range(aux.t, from, n - 3);
  }
  base.at(0, 1) = -aux.b[1];
  base.at(1, 1) = aux.b[0];
  for (int col = 2; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      int from = std::max(row - 1, 0);
      Int tp = prod_range(aux.t, from, col - 3);
      base.at(row, col) = -aux.m[row] * aux.b[col] * tp;
    }
    base.at(col, col) = aux.d[col - 2];
  }

  IntMat inv = mat_inv_unimodular(bprime);
  if (!(inv == base))
    fail(errc::internal_error, "closed-form base disagrees with the integer inverse");
  if (vec_mat(p, base) != unit_vec(n, 0))
    fail(errc::internal_error, "base does not send p to e1");
  return base;
}

IntMat build_scaffold(const CompletionAux& aux, const IntVec& p) {
  const int n = static_cast<int>(p.size());
  IntMat s(n, n);
  s.at(1, 1) = prod_range(aux.d, 0, n - 3);
  for (int col = 2; col < n; ++col)
    s.at(1, col) = aux.m[1] * aux.b[col] * prod_range(aux.d, col - 1, n - 3);
  for (int row = 2; row < n; ++row) {
    Int head = prod_range(aux.d, 0, row - 3);
    s.at(row, row) = aux.b[0] * head * prod_range(aux.d, row - 1, n - 3);
    for (int col = row + 1; col < n; ++col)
      s.at(row, col) = aux.m[row] * aux.b[0] * aux.b[col] * head * prod_range(aux.d, col - 1, n - 3);
  }
  return s;
}

Reduction reduce_to_bounded(const IntMat& base, const IntVec& p) {
  const int n = static_cast<int>(p.size());
  if (base.rows() != n || base.cols() != n) fail(errc::invalid_input, "dimension mismatch");
  for (const Int& x : p)
    if (x < 0) fail(errc::invalid_input, "reduce_to_bounded expects nonnegative p");
  if (p[0] < 1) fail(errc::invalid_input, "reduce_to_bounded expects p[0] >= 1");
  if (vec_mat(p, base) != unit_vec(n, 0))
    fail(errc::internal_error, "base does not send p to e1");

  const Int P = max_abs(p);
  auto col_bound = [&](int j) { return j == 0 ? P : pow_int(2, j - 1) * P; };
  auto col_within = [&](const IntVec& col, const Int& bound) {
    for (const Int& x : col)
      if (abs(x) > bound) return false;
    return true;
  };

  bool all_within = true;
  for (int j = 0; j < n && all_within; ++j) all_within = col_within(base.col(j), col_bound(j));
  if (all_within) return {IntMat::identity(n), base, 0};

  IntMat inv_base = mat_inv_unimodular(base);
  IntMat coeffs = inv_base * relation_target(p);  // base * coeffs = target
  for (int k = 1; k < n; ++k) {
    if (coeffs.at(0, k) != 0) fail(errc::internal_error, "scaffold has a column-0 component");
    for (int i = k + 1; i < n; ++i)
      if (coeffs.at(i, k) != 0) fail(errc::internal_error, "scaffold is not triangular");
    if (coeffs.at(k, k) < 1) fail(errc::internal_error, "scaffold diagonal not positive");
  }
  if (!col_within(base.col(1), col_bound(1)))
    fail(errc::internal_error, "column 2 of the base exceeds the bound");

  IntMat a(n, n);
  a.set_col(1, base.col(1));
  // Part (I): size-reduce columns 2..n-1 against the already-reduced ones,
  // using floor quotients of the scaffold coefficients.
  IntMat basis_change = IntMat::identity(n);  // expresses original columns in reduced ones
  for (int k = 2; k < n; ++k) {
    const Int& diag = coeffs.at(k, k);
    IntVec col = base.col(k);
    for (int i = 1; i < k; ++i) {
      Int s_prime = 0;
      for (int m = 1; m < k; ++m) s_prime += basis_change.at(i, m) * coeffs.at(m, k);
      Int f = floor_div(s_prime, diag);
      basis_change.at(i, k) = -f;
      if (f == 0) continue;
      IntVec reduced = a.col(i);
      for (int r = 0; r < n; ++r) col[r] += f * reduced[r];
    }
    if (!col_within(col, col_bound(k)))
      fail(errc::internal_error, "column reduction missed its bound");
    a.set_col(k, col);
  }

  // Part (II): rebalance column 0 with moves that keep p * column = 1. Runs
  // of identical single-unit moves are applied as one batch; `iters` counts
  // the underlying unit moves.
  IntVec c = base.col(0);
  Int iters = 0;
  for (int i = 0; i < n; ++i) {
    if (p[i] == 0 && abs(c[i]) > P) {
      c[i] -= floor_div(c[i], p[0]) * p[0];  // unconstrained slot, one shot
      ++iters;
    }
  }
  auto overflow = [&](int side) {  // side +1: entries > P; side -1: entries < -P
    Int s = 0;
    for (int i = 0; i < n; ++i) {
      if (side > 0 && c[i] > P) s += c[i];
      if (side < 0 && c[i] < -P) s -= c[i];
    }
    return s;
  };
  auto ceil_div = [](const Int& a_, const Int& b_) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    return q;
  };
  Int s1 = overflow(+1), s2 = overflow(-1);
  while (s1 > 0 || s2 > 0) {
    if (s1 > 0) {
      int i = 0;
      while (c[i] <= P) ++i;
      int j = 0;
      while (j < n && !(c[j] < 0 && p[j] >= 1)) ++j;
      if (j == n) fail(errc::internal_error, "no negative partner for rebalancing");
      // batch: keeps c_i positive and c_j at most P, as single steps would
      Int t = std::min(ceil_div(c[i] - P, p[j]), Int((P - c[j]) / p[i]));
      c[i] -= t * p[j];
      c[j] += t * p[i];
      iters += t;
    } else {
      int i = 0;
      while (c[i] >= -P) ++i;
      int j = 0;
      while (j < n && !(c[j] > 0 && p[j] >= 1)) ++j;
      if (j == n) fail(errc::internal_error, "no positive partner for rebalancing");
      Int t = std::min(ceil_div(-P - c[i], p[j]), Int((c[j] + P) / p[i]));
      c[i] += t * p[j];
      c[j] -= t * p[i];
      iters += t;
    }
    Int n1 = overflow(+1), n2 = overflow(-1);
    if (!(n1 < s1 || (n1 == s1 && n2 < s2)))
      fail(errc::internal_error, "rebalancing failed to decrease (S1, S2)");
    s1 = n1;
    s2 = n2;
  }
  a.set_col(0, c);

  IntMat reducer = inv_base * a;
  if (mat_det(reducer) != 1) fail(errc::internal_error, "reducer determinant is not 1");
  if (vec_mat(p, a) != unit_vec(n, 0)) fail(errc::internal_error, "result does not send p to e1");
  for (int j = 0; j < n; ++j)
    if (!col_within(a.col(j), col_bound(j))) fail(errc::internal_error, "result exceeds bound");
  return {std::move(reducer), std::move(a), iters};
}

namespace {

struct Normalization {
  IntVec p_norm;
  std::vector<int> perm;        // working slot -> original slot
  std::vector<int> sign_flips;  // per original slot
};

Normalization normalize_tuple(const IntVec& p) {
  const int n = static_cast<int>(p.size());
  Normalization nz;
  nz.perm.resize(n);
  nz.sign_flips.resize(n);
  for (int i = 0; i < n; ++i) {
    nz.perm[i] = i;
    nz.sign_flips[i] = p[i] < 0 ? -1 : 1;
  }
  if (p[0] == 0) {
    int lead = 0;
    while (p[lead] == 0) ++lead;
    std::swap(nz.perm[0], nz.perm[lead]);
  }
  nz.p_norm.resize(n);
  for (int w = 0; w < n; ++w) nz.p_norm[w] = abs(p[nz.perm[w]]);
  return nz;
}

// A_original = W * A_working with W the signed permutation sending the
// normalized tuple back; a column-2 sign flip restores det 1 when needed.
IntMat denormalize(const IntMat& a_working, const Normalization& nz, bool* flipped) {
  const int n = a_working.rows();
  IntMat a(n, n);
  for (int w = 0; w < n; ++w) {
    int orig = nz.perm[w];
    for (int j = 0; j < n; ++j) a.at(orig, j) = Int(nz.sign_flips[orig]) * a_working.at(w, j);
  }
  *flipped = false;
  if (mat_det(a) == -1) {
    for (int i = 0; i < n; ++i) a.at(i, 1) = -a.at(i, 1);
    *flipped = true;
  }
  return a;
}

void check_contract(const IntVec& p, const IntMat& a) {
  const int n = static_cast<int>(p.size());
  if (mat_det(a) != 1) fail(errc::internal_error, "completion determinant is not 1");
  if (vec_mat(p, a) != unit_vec(n, 0)) fail(errc::internal_error, "completion misses e1");
  if (a.max_abs_entry() > completion_bound(p))
    fail(errc::internal_error, "completion exceeds the entry bound");
}

}  // namespace

IntMat unimodular_complete(const IntVec& p) {
  require_coprime(p);
  if (p.size() == 2) {
    IntMat a = bezout_matrix_2d(p[0], p[1]);
    check_contract(p, a);
    return a;
  }
  return unimodular_complete_traced(p).result;
}

CompletionTrace unimodular_complete_traced(const IntVec& p) {
  require_coprime(p);
  const int n = static_cast<int>(p.size());
  CompletionTrace trace;
  trace.p = p;
  trace.bound = completion_bound(p);

  if (n == 2) {
    trace.p_normalized = p;
    trace.perm = {0, 1};
    trace.sign_flips = {1, 1};
    trace.result = bezout_matrix_2d(p[0], p[1]);
    trace.base = trace.result;
    trace.bprime = mat_inv_unimodular(trace.base);
    trace.scaffold = trace.bprime * relation_target(p);
    trace.reducer = IntMat::identity(2);
    check_contract(p, trace.result);
    return trace;
  }

  Normalization nz = normalize_tuple(p);
  trace.p_normalized = nz.p_norm;
  trace.perm = nz.perm;
  trace.sign_flips = nz.sign_flips;

  BprimeResult bp = build_bprime(nz.p_norm);
  trace.bprime = bp.bprime;
  trace.aux = bp.aux;
  trace.base = base_solution(bp.bprime, bp.aux, nz.p_norm);
  trace.scaffold = build_scaffold(bp.aux, nz.p_norm);
  if (!(trace.base * trace.scaffold == relation_target(nz.p_norm)))
    fail(errc::internal_error, "scaffold identity failed");

  Reduction red = reduce_to_bounded(trace.base, nz.p_norm);
  trace.reducer = red.reducer;
  trace.part2_iterations = red.adjustments;
  trace.result = denormalize(red.result, nz, &trace.det_fix_column_flip);
  check_contract(p, trace.result);
  return trace;
}

}  // namespace tsq
