// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/embedding.hpp"

#include <algorithm>

#include "tsq/error.hpp"

namespace tsq {

namespace {

// Conjugation by the permutation matrix moving working slots to fiber
// slots: A_fiber = P A P^T keeps the simplex extent (the simplex is
// permutation invariant) while the direction returns to fiber order.
IntMat to_fiber_coordinates(const IntMat& a_working, const DirectionSpec& v) {
  if (v.is_identity_perm()) return a_working;
  const int n = v.n();
  IntMat a(n, n);
  const auto& perm = v.perm();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(perm[i], perm[j]) = a_working.at(i, j);
  return a;
}

// Exact values <A (r e_j), v_fiber> for j = 0 (origin) .. n.
std::vector<ScalarSpec> vertex_raw_values(const IntMat& a, const Rat& r,
                                          const std::vector<ScalarSpec>& fiber) {
  const int n = static_cast<int>(fiber.size());
  std::vector<ScalarSpec> vals;
  vals.reserve(n + 1);
  vals.emplace_back(Rat(0));
  for (int j = 0; j < n; ++j) {
    ScalarSpec dot{Rat(0)};
    for (int i = 0; i < n; ++i) {
      if (a.at(i, j) == 0) continue;
      dot = dot + ScalarSpec(Rat(a.at(i, j))) * fiber[i];
    }
    vals.push_back(canonicalize(ScalarSpec(Rat(r)) * dot));
  }
  return vals;
}

IntervalNum vector_norm_enclosure(const std::vector<ScalarSpec>& entries, int digits) {
  ScalarSpec n2{Rat(0)};
  for (const auto& x : entries) n2 = n2 + x * x;
  return sqrt_enclosure(scalar_enclosure(n2, digits), digits);
}

struct CandidateResult {
  bool ok = false;
  EmbeddingCertificate cert;
};

// Builds the centered shift and certifies the margin; correctness rests
// entirely on the final certified check, not on the quality of the
// rational approximations used for centering.
CandidateResult finalize_candidate(const DirectionSpec& v, const Rat& r, const IntMat& a_fiber,
                                   Provenance prov, const EmbedLimits& limits) {
  CandidateResult out;
  const int n = v.n();
  const int digits = limits.precision.digits;
  std::vector<ScalarSpec> fiber = v.fiber_entries();
  IntervalNum norm = vector_norm_enclosure(fiber, digits);

  std::vector<ScalarSpec> raw = vertex_raw_values(a_fiber, r, fiber);
  IntervalNum lo_enc = scalar_enclosure(raw[0], digits), hi_enc = lo_enc;
  for (const auto& val : raw) {
    IntervalNum e = scalar_enclosure(val, digits);
    if (e.lo() < lo_enc.lo()) lo_enc = e;
    if (e.hi() > hi_enc.hi()) hi_enc = e;
  }
  // Midpoint of the projected interval, then a small-denominator shift
  // s = -mid * v_unit_approx.
  Rat mid = ((lo_enc.mid() + hi_enc.mid()) / Rat(2) / norm.mid())
                .round_to_denominator(limits.shift_denominator_cap);
  std::vector<Rat> shift(n);
  for (int i = 0; i < n; ++i) {
    Rat unit_i = (scalar_enclosure(fiber[i], digits).mid() / norm.mid())
                     .round_to_denominator(limits.shift_denominator_cap);
    shift[i] = -mid * unit_i;
  }

  ScalarSpec shift_dot{Rat(0)};
  for (int i = 0; i < n; ++i) shift_dot = shift_dot + ScalarSpec(shift[i]) * fiber[i];

  Rat worst(0);
  for (const auto& val : raw) {
    IntervalNum proj = scalar_enclosure(val + shift_dot, digits).abs() / norm;
    if (proj.hi() > worst) worst = proj.hi();
  }
  Rat margin = Rat(1) - worst;
  if (margin.sign() <= 0) return out;

  out.ok = true;
  out.cert.n = n;
  out.cert.r = r;
  out.cert.direction = v;
  out.cert.fiber_matrix = a_fiber;
  out.cert.shift = std::move(shift);
  out.cert.margin = margin;
  out.cert.provenance = std::move(prov);
  return out;
}

Provenance make_provenance(const std::string& kind, const Int& param, const IntVec& p,
                           const DirectionSpec& v, const IntMat& a_working, const Rat& adm) {
  Provenance prov;
  prov.kind = kind;
  prov.param = param;
  prov.p = p;
  prov.admissible = adm;
  Int p_norm_sq = 0;
  for (const Int& x : p) p_norm_sq += x * x;
  prov.ell_value = ell_rsq(a_working, Rat(p_norm_sq));
  prov.theta_ub = theta_upper_bound(v, p);
  prov.delta_ub = delta_upper_bound(prov.ell_value, prov.theta_ub);
  return prov;
}

}  // namespace

EmbeddingCertificate embed(const DirectionSpec& v, const Rat& r, const EmbedLimits& limits) {
  if (r.sign() <= 0) fail(errc::invalid_input, "radius must be positive");
  if (v.kind() == DirectionKind::rational)
    fail(errc::rational_direction_rejected,
         "rational directions carry a finite embedding obstruction");

  const int n = v.n();
  Rat best_adm(0);
  bool precision_short = false;

  auto try_tuple = [&](const IntVec& p, const std::string& kind,
                       const Int& param) -> CandidateResult {
    IntMat a_working = unimodular_complete(p);
    IntMat a_fiber = to_fiber_coordinates(a_working, v);
    Rat adm;
    try {
      adm = admissible_r(a_fiber, v, limits.precision);
    } catch (const Error& e) {
      if (e.code() == errc::needs_refinement) {
        precision_short = true;
        return {};
      }
      throw;
    }
    if (adm > best_adm) best_adm = adm;
    if (!(adm > r)) return {};
    return finalize_candidate(v, r, a_fiber,
                              make_provenance(kind, param, p, v, a_working, adm), limits);
  };

  if (n == 2) {
    ConvergentRun run = convergents_2d_run(v.working()[1], limits.max_index);
    precision_short = run.precision_exhausted;
    for (size_t i = 0; i < run.convergents.size(); ++i) {
      const Convergent& c = run.convergents[i];
      IntVec p{c.q, c.p};
      auto [pc, g] = coprime_reduce(p);
      CandidateResult res = try_tuple(pc, "convergent", Int(i + 1));
      if (res.ok) return res.cert;
    }
  } else {
    for (Int q_big = 2; q_big <= limits.q_max; q_big *= 2) {
      ApproxStep step;
      try {
        step = simultaneous_approx(v, q_big);
      } catch (const Error& e) {
        if (e.code() == errc::needs_refinement) {
          precision_short = true;
          break;  // larger Q needs even more precision
        }
        if (e.code() == errc::search_exhausted) continue;
        throw;
      }
      auto [pc, g] = coprime_reduce(step.p);
      CandidateResult res = try_tuple(pc, "dirichlet", q_big);
      if (res.ok) return res.cert;
    }
  }

  if (precision_short)
    fail(errc::needs_refinement, "direction precision exhausted; best admissible r so far " +
                                     best_adm.str());
  fail(errc::search_exhausted,
       "limits exhausted; best admissible r found " + best_adm.str());
}

VerifyResult verify_certificate(const EmbeddingCertificate& cert, Precision prec) {
  VerifyResult res;
  const int n = cert.n;
  if (n < 2 || cert.direction.n() != n || cert.fiber_matrix.rows() != n ||
      cert.fiber_matrix.cols() != n || static_cast<int>(cert.shift.size()) != n) {
    res.reason = "malformed-certificate";
    return res;
  }
  if (cert.r.sign() <= 0) {
    res.reason = "non-positive-radius";
    return res;
  }
  if (cert.margin.sign() <= 0) {
    res.reason = "non-positive-margin";
    return res;
  }
  if (mat_det(cert.fiber_matrix) != 1) {
    res.reason = "not-unimodular";
    return res;
  }

  std::vector<ScalarSpec> fiber = cert.direction.fiber_entries();
  ScalarSpec shift_dot{Rat(0)};
  for (int i = 0; i < n; ++i) shift_dot = shift_dot + ScalarSpec(cert.shift[i]) * fiber[i];
  std::vector<ScalarSpec> raw = vertex_raw_values(cert.fiber_matrix, cert.r, fiber);
  const Rat budget = Rat(1) - cert.margin;

  for (int u = 0; u <= n; ++u) {
    // Certified |<A u + s, v>| <= (1 - margin) |v|, division-free.
    ScalarSpec lhs = raw[u] + shift_dot;
    Precision p = prec;
    while (true) {
      IntervalNum lhs_enc = scalar_enclosure(lhs, p.digits).abs();
      IntervalNum rhs = IntervalNum(budget) * vector_norm_enclosure(fiber, p.digits);
      if (lhs_enc.hi() <= rhs.lo()) break;  // vertex certified
      if (lhs_enc.lo() > rhs.hi()) {
        res.status = VerifyResult::Status::reject;
        res.reason = "vertex-bound-violated";
        res.witness_vertex = u;
        return res;
      }
      if (!p.can_refine()) {
        res.status = VerifyResult::Status::needs_refinement;
        res.reason = "vertex bound indeterminate at max precision";
        res.witness_vertex = u;
        return res;
      }
      p = p.refined();
    }
  }
  res.status = VerifyResult::Status::accept;
  res.reason = "";
  return res;
}

MapPoint apply_map(const EmbeddingCertificate& cert, const MapPoint& pt) {
  const int n = cert.n;
  if (static_cast<int>(pt.base.size()) != n || static_cast<int>(pt.fiber.size()) != n)
    fail(errc::invalid_input, "point dimension mismatch");
  IntMat base_block = mat_inv_unimodular(cert.fiber_matrix.transpose());
  MapPoint out;
  out.base.assign(n, Rat(0));
  out.fiber.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat b(0), f(0);
    for (int j = 0; j < n; ++j) {
      b += Rat(base_block.at(i, j)) * pt.base[j];
      f += Rat(cert.fiber_matrix.at(i, j)) * pt.fiber[j];
    }
    out.base[i] = b - Rat(b.floor());  // mod 1 into [0, 1)
    out.fiber[i] = f + cert.shift[i];
  }
  return out;
}

std::pair<std::vector<Rat>, std::vector<Rat>> apply_differential(
    const EmbeddingCertificate& cert, const std::vector<Rat>& base_disp,
    const std::vector<Rat>& fiber_disp) {
  const int n = cert.n;
  IntMat base_block = mat_inv_unimodular(cert.fiber_matrix.transpose());
  std::vector<Rat> db(n, Rat(0)), df(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      db[i] += Rat(base_block.at(i, j)) * base_disp[j];
      df[i] += Rat(cert.fiber_matrix.at(i, j)) * fiber_disp[j];
    }
  return {db, df};
}

Rat symplectic_pairing(const std::vector<Rat>& base1, const std::vector<Rat>& fiber1,
                       const std::vector<Rat>& base2, const std::vector<Rat>& fiber2) {
  Rat s(0);
  for (size_t i = 0; i < base1.size(); ++i)
    s += base1[i] * fiber2[i] - base2[i] * fiber1[i];
  return s;
}

IntMat cat_matrix(CatKind kind) {
  if (kind == CatKind::cat2) return IntMat{{2, 1}, {1, 1}};
  return IntMat{{2, 1, 3}, {3, 2, 5}, {2, 1, 4}};
}

namespace {

// Characteristic polynomial of the 3x3 generator: x^3 - 8x^2 + 6x - 1.
Rat cat3_charpoly(const Rat& x) { return ((x - Rat(8)) * x + Rat(6)) * x - Rat(1); }

}  // namespace

Cat3Eigen cat3_dominant(int digits) {
  // The dominant root lies in (7, 8); bisect until the enclosure is well
  // below the requested output precision.
  Rat lo(7), hi(8);
  Rat tol = pow10_neg(digits + 5);
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / Rat(2);
    if (cat3_charpoly(mid).sign() < 0)
      lo = mid;
    else
      hi = mid;
  }
  IntervalNum lambda(lo, hi);
  // Eigenvector (1, (l^2 - 6l + 2)/(l - 1), l/(l - 1)) from row elimination.
  IntervalNum one(Rat(1));
  IntervalNum den = lambda - one;
  IntervalNum x2 = (lambda * lambda - IntervalNum(Rat(6)) * lambda + IntervalNum(Rat(2))) / den;
  IntervalNum x3 = lambda / den;
  DirectionSpec dir = normalize_direction({ScalarSpec(Rat(1)), ScalarSpec(x2), ScalarSpec(x3)});
  return {lambda, dir};
}

Extent iterate_width(const IntMat& a, unsigned k, const Rat& r, const DirectionSpec& v,
                     Precision prec) {
  Int det = mat_det(a);
  if (det != 1 && det != -1) fail(errc::not_unimodular, "iterate needs |det| = 1");
  IntMat inv = mat_inv_unimodular(a);
  return fiber_extent(mat_pow(inv, k), r, v, prec);
}

}  // namespace tsq
