// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_UNIMODULAR_HPP
#define TSQ_UNIMODULAR_HPP

#include <vector>

#include "tsq/int_linalg.hpp"

namespace tsq {

// Bounded-entry unimodular completion: given a coprime integer row tuple p,
// produce A in SL_n(Z) with p*A = (1, 0, ..., 0) and every entry of A
// bounded by 2^max(n-2,0) * max_k |p_k|.

// Witness integer sequences of the row-by-row construction. All vectors are
// 0-indexed; d and t have length n-2, b and m length n.
struct CompletionAux {
  IntVec d;  // quotients of consecutive prefix gcds
  IntVec b;  // reduced tuple entries
  IntVec m;  // Bezout coefficients pairing with b
  IntVec t;  // Bezout coefficients pairing with d
};

struct BprimeResult {
  IntMat bprime;
  CompletionAux aux;
};

struct Reduction {
  IntMat reducer;  // T, det 1
  IntMat result;   // A = base * T
  Int adjustments = 0;  // column-1 rebalancing steps, finite by construction
};

// Full construction record for one completion.
struct CompletionTrace {
  IntVec p;             // input tuple
  IntVec p_normalized;  // nonnegative entries, leading entry nonzero
  std::vector<int> perm;        // working slot -> original slot (a single swap)
  std::vector<int> sign_flips;  // per original slot, +1 or -1
  IntMat bprime;    // first row p_normalized, det 1
  IntMat base;      // bprime^-1, with p_normalized * base = e1
  IntMat scaffold;  // S with base * S = the column-relation target
  IntMat reducer;   // T, det 1
  IntMat result;    // A in the original coordinates, p * result = e1
  CompletionAux aux;
  Int bound;  // 2^max(n-2,0) * max_k |p_k|
  Int part2_iterations = 0;
  bool det_fix_column_flip = false;
};

// n = 2 Bezout completion [[a, -q], [c, p]] with a p + c q = 1,
// |a| <= |q|, |c| <= |p|.
IntMat bezout_matrix_2d(const Int& p, const Int& q);

// Row-by-row B' with first row p, det telescoping through the prefix gcds.
// Requires coprime p with p[0] != 0 (apply sign normalization first).
BprimeResult build_bprime(const IntVec& p);

// B = B'^-1; the closed-form assembly from aux is cross-checked against the
// adjugate inverse and the defining identity p * B = e1.
IntMat base_solution(const IntMat& bprime, const CompletionAux& aux, const IntVec& p);

// S with base * S = target, where target column k holds -p_k in the first
// slot and p_1 in slot k. Assembled from aux and verified exactly.
IntMat build_scaffold(const CompletionAux& aux, const IntVec& p);

// Column reduction: T of determinant 1 with A = base * T satisfying
// per-column bounds (column j in [-2^(j-1) P, 2^(j-1) P]^n for 0-indexed
// j >= 1, column 0 in [-P, P]^n, P = max p_k). Expects nonnegative p with
// p[0] >= 1 and p * base = e1.
Reduction reduce_to_bounded(const IntMat& base, const IntVec& p);

// Dispatch: n = 2 Bezout, n >= 3 through the B' -> B -> reduction chain with
// sign/permutation normalization folded back into the result.
IntMat unimodular_complete(const IntVec& p);
CompletionTrace unimodular_complete_traced(const IntVec& p);

// The contracted entry bound 2^max(n-2,0) * max_k |p_k|.
Int completion_bound(const IntVec& p);

}  // namespace tsq

#endif  // TSQ_UNIMODULAR_HPP
