// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_BARCODE_HPP
#define TSQ_BARCODE_HPP

#include <optional>
#include <vector>

#include "tsq/rational.hpp"

namespace tsq {

// Half-open persistence interval [birth, death), death possibly infinite.
// Degenerate bars (birth == death) are rejected at construction.
struct Bar {
  Rat birth;
  std::optional<Rat> death;  // nullopt = +infinity

  Bar(Rat birth_, Rat death_);
  Bar(Rat birth_, std::optional<Rat> death_);

  bool is_infinite() const { return !death.has_value(); }
  Rat half_length() const;  // (death - birth) / 2; infinite bars reject

  friend bool operator==(const Bar& a, const Bar& b) {
    return a.birth == b.birth && a.death == b.death;
  }
};

// Finite multiset of bars, stored in a canonical order so multiset equality
// is plain vector equality.
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::vector<Bar> bars);

  const std::vector<Bar>& bars() const { return bars_; }
  size_t size() const { return bars_.size(); }
  bool empty() const { return bars_.empty(); }

  friend bool operator==(const Barcode& a, const Barcode& b) { return a.bars_ == b.bars_; }

 private:
  std::vector<Bar> bars_;
};

struct Endpoints {
  std::vector<Rat> values;  // all finite births and deaths, sorted, multiset
  size_t infinite_count = 0;
};

// Finite endpoints as a multiset plus the count of infinite bars.
Endpoints endpoints_multiset(const Barcode& b);

struct BotDistance {
  bool infinite = false;
  Rat value;  // meaningful when !infinite

  friend bool operator==(const BotDistance& a, const BotDistance& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

// Exact bottleneck distance: min over partial matchings of the max of
// matched sup-costs max(|db|, |dd|) and unmatched half-lengths. Infinite
// bars must pair with infinite bars at cost |db - db'|; mismatched infinite
// counts give distance +infinity. Brute force for small inputs, candidate
// binary search with bipartite feasibility beyond.
BotDistance bottleneck_distance(const Barcode& a, const Barcode& b);

// Exhaustive matcher over all partial matchings; the independent oracle for
// the fast path. Practical up to ~10 bars per side.
BotDistance bottleneck_distance_brute(const Barcode& a, const Barcode& b);

// Candidate binary search over bipartite feasibility, regardless of size.
BotDistance bottleneck_distance_fast(const Barcode& a, const Barcode& b);

// Least birth among infinite bars, or nullopt when none exist.
std::optional<Rat> min_marked_spectrum(const Barcode& b);

// Multiset equality of bars.
bool barcodes_equal(const Barcode& a, const Barcode& b);

}  // namespace tsq

#endif  // TSQ_BARCODE_HPP
