// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/json_io.hpp"

#include <limits>

#include "tsq/error.hpp"

namespace tsq {

namespace {

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  fail(errc::parse_error, "expected an integer");
}

std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(errc::parse_error, std::string("expected string for ") + what);
  return j.get<std::string>();
}

// Decimal literal "1.4142" -> enclosure with radius 10^-(fraction digits).
ScalarSpec scalar_from_string(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat::parse(s);
  Rat mid = Rat::parse(s);
  int frac_digits = static_cast<int>(s.size() - dot - 1);
  return canonicalize(IntervalNum::from_midpoint(mid, pow10_neg(frac_digits)));
}

}  // namespace

Json rat_to_json(const Rat& x) { return Json(x.str()); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long>()));
  return Rat::parse(require_string(j, "rational"));
}

Json scalar_to_json(const ScalarSpec& x) {
  if (const auto* r = std::get_if<Rat>(&x)) return rat_to_json(*r);
  if (const auto* q = std::get_if<QSurd>(&x)) {
    Json j;
    j["a"] = q->rational_part().str();
    j["b"] = q->surd_coefficient().str();
    j["d"] = int_to_json(q->radicand());
    return j;
  }
  const auto& iv = std::get<IntervalNum>(x);
  Json j;
  j["lo"] = iv.lo().str();
  j["hi"] = iv.hi().str();
  return j;
}

ScalarSpec scalar_from_json(const Json& j) {
  if (j.is_string()) return scalar_from_string(j.get<std::string>());
  if (j.is_number_integer()) return ScalarSpec(Rat(Int(j.get<long>())));
  if (j.is_object()) {
    if (j.contains("d"))
      return canonicalize(QSurd(rat_from_json(j.at("a")), rat_from_json(j.at("b")),
                                int_from_json(j.at("d"))));
    if (j.contains("lo"))
      return canonicalize(
          IntervalNum(Rat::parse(require_string(j.at("lo"), "lo")),
                      Rat::parse(require_string(j.at("hi"), "hi"))));
  }
  fail(errc::parse_error, "unrecognized scalar shape");
}

Json direction_to_json(const DirectionSpec& v) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : v.working()) entries.push_back(scalar_to_json(e));
  j["entries"] = std::move(entries);
  const char* kind = "rational";
  if (v.kind() == DirectionKind::quadratic) kind = "quadratic";
  if (v.kind() == DirectionKind::interval_presumed_irrational) kind = "interval";
  j["kind"] = kind;
  j["perm"] = v.perm();
  return j;
}

DirectionSpec direction_from_json(const Json& j) {
  const Json* entries = nullptr;
  if (j.is_array()) {
    entries = &j;
  } else if (j.is_object() && j.contains("entries")) {
    entries = &j.at("entries");
  } else {
    fail(errc::parse_error, "direction needs an entry list");
  }
  std::vector<ScalarSpec> vals;
  for (const auto& e : *entries) vals.push_back(scalar_from_json(e));
  if (j.is_object() && j.contains("perm")) {
    // Stored entries are in working order; restore fiber order first.
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    if (perm.size() != vals.size()) fail(errc::parse_error, "permutation size mismatch");
    std::vector<ScalarSpec> fiber(vals.size(), ScalarSpec(Rat(0)));
    for (size_t i = 0; i < vals.size(); ++i) {
      if (perm[i] < 0 || perm[i] >= static_cast<int>(vals.size()))
        fail(errc::parse_error, "permutation out of range");
      fiber[perm[i]] = vals[i];
    }
    vals = std::move(fiber);
  }
  return normalize_direction(vals);
}

Json approx_step_to_json(const ApproxStep& s) {
  Json j;
  if (s.source == ApproxStep::Source::convergent)
    j["index"] = int_to_json(s.param);
  else
    j["Q"] = int_to_json(s.param);
  j["q"] = s.q.get_str();
  Json p = Json::array();
  for (const Int& x : s.p) p.push_back(x.get_str());
  j["p"] = std::move(p);
  j["err_bound"] = s.err_bound.str();
  return j;
}

Json extent_to_json(const Extent& e) {
  Json j;
  j["lo"] = scalar_to_json(e.lo);
  j["hi"] = scalar_to_json(e.hi);
  j["width"] = scalar_to_json(e.width);
  j["witnesses"] = Json::array({e.witness_lo, e.witness_hi});
  return j;
}

Json intvec_to_json(const IntVec& v, bool strings) {
  Json j = Json::array();
  for (const Int& x : v) j.push_back(strings ? Json(x.get_str()) : int_to_json(x));
  return j;
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) fail(errc::parse_error, "expected an integer array");
  IntVec v;
  for (const auto& e : j) v.push_back(int_from_json(e));
  return v;
}

Json intmat_to_json(const IntMat& m, bool strings) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) j.push_back(intvec_to_json(m.row(i), strings));
  return j;
}

IntMat intmat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(errc::parse_error, "expected a matrix");
  const int rows = static_cast<int>(j.size());
  IntVec first = intvec_from_json(j.at(0));
  IntMat m(rows, static_cast<int>(first.size()));
  m.set_row(0, first);
  for (int i = 1; i < rows; ++i) {
    IntVec row = intvec_from_json(j.at(i));
    if (static_cast<int>(row.size()) != m.cols()) fail(errc::parse_error, "ragged matrix");
    m.set_row(i, row);
  }
  return m;
}

Json certificate_to_json(const EmbeddingCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["r"] = c.r.str();
  j["direction"] = direction_to_json(c.direction);
  j["fiber_matrix"] = intmat_to_json(c.fiber_matrix, true);
  Json shift = Json::array();
  for (const Rat& s : c.shift) shift.push_back(s.str());
  j["shift"] = std::move(shift);
  j["margin"] = c.margin.str();
  Json prov;
  prov["kind"] = c.provenance.kind;
  if (c.provenance.kind == "convergent")
    prov["index"] = int_to_json(c.provenance.param);
  else
    prov["Q"] = int_to_json(c.provenance.param);
  prov["p"] = intvec_to_json(c.provenance.p, true);
  prov["admissible_r"] = c.provenance.admissible.str();
  prov["ell"] = c.provenance.ell_value.str();
  prov["theta_ub"] = c.provenance.theta_ub.str();
  prov["delta_ub"] = c.provenance.delta_ub.str();
  j["provenance"] = std::move(prov);
  return j;
}

EmbeddingCertificate certificate_from_json(const Json& j) {
  EmbeddingCertificate c;
  try {
    c.n = j.at("n").get<int>();
    c.r = rat_from_json(j.at("r"));
    c.direction = direction_from_json(j.at("direction"));
    c.fiber_matrix = intmat_from_json(j.at("fiber_matrix"));
    for (const auto& s : j.at("shift")) c.shift.push_back(rat_from_json(s));
    c.margin = rat_from_json(j.at("margin"));
    if (j.contains("provenance")) {
      const Json& prov = j.at("provenance");
      if (prov.contains("kind")) c.provenance.kind = prov.at("kind").get<std::string>();
      if (prov.contains("index")) c.provenance.param = int_from_json(prov.at("index"));
      if (prov.contains("Q")) c.provenance.param = int_from_json(prov.at("Q"));
      if (prov.contains("p")) c.provenance.p = intvec_from_json(prov.at("p"));
      if (prov.contains("admissible_r"))
        c.provenance.admissible = rat_from_json(prov.at("admissible_r"));
      if (prov.contains("ell")) c.provenance.ell_value = rat_from_json(prov.at("ell"));
      if (prov.contains("theta_ub")) c.provenance.theta_ub = rat_from_json(prov.at("theta_ub"));
      if (prov.contains("delta_ub")) c.provenance.delta_ub = rat_from_json(prov.at("delta_ub"));
    }
  } catch (const Json::exception& e) {
    fail(errc::parse_error, std::string("certificate: ") + e.what());
  }
  return c;
}

Json barcode_to_json(const Barcode& b) {
  Json bars = Json::array();
  for (const Bar& bar : b.bars()) {
    Json jb;
    jb["birth"] = bar.birth.str();
    jb["death"] = bar.is_infinite() ? Json("inf") : Json(bar.death->str());
    bars.push_back(std::move(jb));
  }
  Json j;
  j["bars"] = std::move(bars);
  return j;
}

Barcode barcode_from_json(const Json& j) {
  std::vector<Bar> bars;
  try {
    for (const auto& jb : j.at("bars")) {
      Rat birth = rat_from_json(jb.at("birth"));
      const Json& d = jb.at("death");
      if (d.is_string() && d.get<std::string>() == "inf")
        bars.emplace_back(birth, std::nullopt);
      else
        bars.emplace_back(birth, rat_from_json(d));
    }
  } catch (const Json::exception& e) {
    fail(errc::parse_error, std::string("barcode: ") + e.what());
  }
  return Barcode(std::move(bars));
}

Json map_point_to_json(const MapPoint& p) {
  Json j;
  Json base = Json::array(), fiber = Json::array();
  for (const Rat& x : p.base) base.push_back(x.str());
  for (const Rat& x : p.fiber) fiber.push_back(x.str());
  j["base"] = std::move(base);
  j["fiber"] = std::move(fiber);
  return j;
}

MapPoint map_point_from_json(const Json& j) {
  MapPoint p;
  try {
    for (const auto& x : j.at("base")) p.base.push_back(rat_from_json(x));
    for (const auto& x : j.at("fiber")) p.fiber.push_back(rat_from_json(x));
  } catch (const Json::exception& e) {
    fail(errc::parse_error, std::string("point: ") + e.what());
  }
  return p;
}

Json bot_distance_to_json(const BotDistance& d) {
  Json j;
  j["distance"] = d.infinite ? Json("inf") : Json(d.value.str());
  return j;
}

Json completion_to_json(const CompletionTrace& trace, bool include_trace) {
  Json j;
  j["p"] = intvec_to_json(trace.p, false);
  j["A"] = intmat_to_json(trace.result, false);
  j["bound"] = int_to_json(trace.bound);
  if (include_trace) {
    Json t;
    t["p_normalized"] = intvec_to_json(trace.p_normalized, false);
    t["perm"] = trace.perm;
    t["sign_flips"] = trace.sign_flips;
    t["bprime"] = intmat_to_json(trace.bprime, false);
    t["base"] = intmat_to_json(trace.base, false);
    t["scaffold"] = intmat_to_json(trace.scaffold, false);
    t["reducer"] = intmat_to_json(trace.reducer, false);
    Json aux;
    aux["d"] = intvec_to_json(trace.aux.d, false);
    aux["b"] = intvec_to_json(trace.aux.b, false);
    aux["m"] = intvec_to_json(trace.aux.m, false);
    aux["t"] = intvec_to_json(trace.aux.t, false);
    t["aux"] = std::move(aux);
    t["part2_iterations"] = int_to_json(trace.part2_iterations);
    t["det_fix_column_flip"] = trace.det_fix_column_flip;
    j["trace"] = std::move(t);
  }
  return j;
}

}  // namespace tsq
