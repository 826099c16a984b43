// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_PRECISION_HPP
#define TSQ_PRECISION_HPP

#include <algorithm>
#include <cstdlib>

namespace tsq {

// Decimal-digit budgets for certified enclosures. Enclosure-producing
// operations start at a caller-given digit count and refine on demand;
// refinement is always explicit, never silent.
struct Precision {
  int digits = 30;        // starting enclosure precision
  int max_digits = 1000;  // refinement ceiling

  Precision refined() const { return {std::min(digits * 2, max_digits), max_digits}; }
  bool can_refine() const { return digits < max_digits; }
};

// Default precision; TORUS_SQUEEZE_DIGITS overrides the starting digits.
inline Precision default_precision() {
  Precision p;
  if (const char* env = std::getenv("TORUS_SQUEEZE_DIGITS")) {
    int d = std::atoi(env);
    if (d >= 1) p.digits = std::min(d, p.max_digits);
  }
  return p;
}

}  // namespace tsq

#endif  // TSQ_PRECISION_HPP
