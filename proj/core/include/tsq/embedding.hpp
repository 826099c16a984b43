// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_EMBEDDING_HPP
#define TSQ_EMBEDDING_HPP

#include <string>
#include <vector>

#include "tsq/diophantine.hpp"
#include "tsq/geometry.hpp"
#include "tsq/unimodular.hpp"

namespace tsq {

// How a certificate's fiber matrix was found, plus the diagnostic bounds of
// the approximation step that produced it.
struct Provenance {
  std::string kind;  // "convergent" or "dirichlet"
  Int param = 0;     // convergent index or Dirichlet Q
  IntVec p;          // lattice tuple in working order
  Rat admissible;    // certified admissible radius of the fiber matrix
  Rat ell_value;     // diagnostic: ell at |p|
  Rat theta_ub;      // diagnostic: angle bound to the direction
  Rat delta_ub;      // diagnostic: ell * theta
};

// Witness that A Delta^n(r) + s projects strictly inside (-1, 1) along
// v/|v|: every simplex vertex u satisfies |<A u + s, v/|v|>| <= 1 - margin.
struct EmbeddingCertificate {
  int n = 0;
  Rat r;
  DirectionSpec direction;
  IntMat fiber_matrix;       // det 1, in fiber coordinates
  std::vector<Rat> shift;
  Rat margin;                // > 0
  Provenance provenance;
};

struct EmbedLimits {
  int max_index = 64;            // n = 2: convergent cap
  Int q_max = Int(1) << 24;      // n >= 3: Dirichlet Q cap, schedule Q = 2^i
  Int shift_denominator_cap = Int(1000000);
  Precision precision = default_precision();
};

// End-to-end search: approximation steps -> coprime reduction -> unimodular
// completion -> admissible-radius check -> centered shift and certified
// margin. Smallest successful index wins; rational directions are rejected
// outright (the embedding is obstructed there).
EmbeddingCertificate embed(const DirectionSpec& v, const Rat& r, const EmbedLimits& limits = {});

struct VerifyResult {
  enum class Status { accept, reject, needs_refinement };
  Status status = Status::reject;
  std::string reason;
  int witness_vertex = -1;  // simplex vertex index for bound failures

  bool accepted() const { return status == Status::accept; }
};

// Independent re-check from scratch: integrality, det A = 1, positive
// margin, and the certified per-vertex bound. Never trusts provenance.
VerifyResult verify_certificate(const EmbeddingCertificate& cert,
                                Precision prec = default_precision());

// Point of T*T^n: base coordinates live mod 1 in [0, 1).
struct MapPoint {
  std::vector<Rat> base;
  std::vector<Rat> fiber;
};

// The linear-plus-shift symplectomorphism of the certificate:
// base' = (A^T)^-1 base mod 1, fiber' = A fiber + s.
MapPoint apply_map(const EmbeddingCertificate& cert, const MapPoint& pt);

// Differential of apply_map on displacement pairs (no mod-1 wrap), for
// symplectic-pairing checks.
std::pair<std::vector<Rat>, std::vector<Rat>> apply_differential(
    const EmbeddingCertificate& cert, const std::vector<Rat>& base_disp,
    const std::vector<Rat>& fiber_disp);

// Standard pairing sum(dx1_i dy2_i - dx2_i dy1_i).
Rat symplectic_pairing(const std::vector<Rat>& base1, const std::vector<Rat>& fiber1,
                       const std::vector<Rat>& base2, const std::vector<Rat>& fiber2);

enum class CatKind { cat2, cat3 };

// The 2x2 hyperbolic torus automorphism and its 3x3 analogue.
IntMat cat_matrix(CatKind kind);

struct Cat3Eigen {
  IntervalNum lambda;        // dominant eigenvalue enclosure
  DirectionSpec direction;   // dominant eigendirection, interval entries
};

// Dominant eigendata of the 3x3 generator by certified root bracketing of
// the characteristic polynomial.
Cat3Eigen cat3_dominant(int digits);

// fiber_extent of A^-k: the width along the expanding eigendirection
// contracts by the square of the dominant eigenvalue per step.
Extent iterate_width(const IntMat& a, unsigned k, const Rat& r, const DirectionSpec& v,
                     Precision prec = default_precision());

}  // namespace tsq

#endif  // TSQ_EMBEDDING_HPP
