// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/direction.hpp"

#include <algorithm>

#include "tsq/error.hpp"

namespace tsq {

const char* direction_kind_name(DirectionKind k) {
  switch (k) {
    case DirectionKind::rational: return "rational";
    case DirectionKind::quadratic: return "quadratic";
    case DirectionKind::interval_presumed_irrational: return "interval";
  }
  return "unknown";
}

DirectionSpec::DirectionSpec(std::vector<ScalarSpec> working, std::vector<int> perm,
                             DirectionKind kind)
    : working_(std::move(working)), perm_(std::move(perm)), kind_(kind) {
  if (working_.size() < 2) fail(errc::invalid_input, "direction needs dimension >= 2");
  if (perm_.size() != working_.size()) fail(errc::invalid_input, "permutation size mismatch");
  auto first = scalar_as_rat(working_[0]);
  if (!first || *first != Rat(1))
    fail(errc::invalid_input, "normalized direction must start with 1");
}

bool DirectionSpec::is_identity_perm() const {
  for (int i = 0; i < n(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

std::vector<ScalarSpec> DirectionSpec::fiber_entries() const {
  std::vector<ScalarSpec> f(working_.size(), ScalarSpec(Rat(0)));
  for (size_t i = 0; i < working_.size(); ++i) f[perm_[i]] = working_[i];
  return f;
}

DirectionSpec normalize_direction(const std::vector<ScalarSpec>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n < 2) fail(errc::invalid_input, "direction needs dimension >= 2");

  int lead = -1;
  for (int i = 0; i < n; ++i) {
    auto s = scalar_sign(raw[i]);
    if (s.has_value() && *s != 0) { lead = i; break; }
  }
  if (lead < 0)
    fail(errc::indeterminate_direction, "no entry with certified nonzero sign");

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::swap(perm[0], perm[lead]);

  const ScalarSpec& pivot = raw[lead];
  std::vector<ScalarSpec> working;
  working.reserve(n);
  for (int i = 0; i < n; ++i) working.push_back(canonicalize(raw[perm[i]] / pivot));
  working[0] = Rat(1);  // exact by construction

  bool any_interval = false, any_surd = false;
  for (const auto& e : working) {
    switch (kind_of(e)) {
      case ScalarKind::interval: any_interval = true; break;
      case ScalarKind::quadratic: any_surd = true; break;
      case ScalarKind::rational: break;
    }
  }
  DirectionKind kind = any_interval ? DirectionKind::interval_presumed_irrational
                       : any_surd  ? DirectionKind::quadratic
                                   : DirectionKind::rational;
  return DirectionSpec(std::move(working), std::move(perm), kind);
}

}  // namespace tsq
