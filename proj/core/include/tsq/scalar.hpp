// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_SCALAR_HPP
#define TSQ_SCALAR_HPP

#include <optional>
#include <string>
#include <variant>

#include "tsq/interval.hpp"
#include "tsq/rational.hpp"
#include "tsq/surd.hpp"

namespace tsq {

// Tagged exact-number union. Rat and QSurd carry exact values with exact
// comparison; IntervalNum carries a certified enclosure whose comparisons
// may be indeterminate. Mixing a surd with an interval promotes the surd to
// an enclosure at kSurdPromotionDigits.
using ScalarSpec = std::variant<Rat, QSurd, IntervalNum>;

inline constexpr int kSurdPromotionDigits = 60;

enum class ScalarKind { rational, quadratic, interval };

ScalarKind kind_of(const ScalarSpec& s);

// QSurd with zero surd part becomes Rat; a point interval becomes Rat.
ScalarSpec canonicalize(ScalarSpec s);

ScalarSpec operator+(const ScalarSpec& x, const ScalarSpec& y);
ScalarSpec operator-(const ScalarSpec& x, const ScalarSpec& y);
ScalarSpec operator*(const ScalarSpec& x, const ScalarSpec& y);
ScalarSpec operator/(const ScalarSpec& x, const ScalarSpec& y);
ScalarSpec operator-(const ScalarSpec& x);

// Exact sign for Rat/QSurd; certified sign for intervals, nullopt when the
// enclosure straddles zero.
std::optional<int> scalar_sign(const ScalarSpec& x);

// Sign of x - y under the same certification rules.
std::optional<int> scalar_compare(const ScalarSpec& x, const ScalarSpec& y);

bool scalar_is_exact(const ScalarSpec& x);
bool scalar_is_zero(const ScalarSpec& x);

IntervalNum scalar_enclosure(const ScalarSpec& x, int digits);

// Exact value when the scalar is a Rat (or a degenerate surd/interval).
std::optional<Rat> scalar_as_rat(const ScalarSpec& x);

double scalar_to_double(const ScalarSpec& x);
std::string scalar_str(const ScalarSpec& x);

}  // namespace tsq

#endif  // TSQ_SCALAR_HPP
