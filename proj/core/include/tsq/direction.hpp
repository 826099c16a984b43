// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_DIRECTION_HPP
#define TSQ_DIRECTION_HPP

#include <vector>

#include "tsq/scalar.hpp"

namespace tsq {

enum class DirectionKind { rational, quadratic, interval_presumed_irrational };

const char* direction_kind_name(DirectionKind k);

// A fiber direction spanning the same line as the raw input, stored
// normalized: entries are permuted so a certified-nonzero entry sits first,
// then divided through by it, making the first working entry exactly 1.
// perm()[i] is the original slot of working entry i, so the original
// ordering is recoverable.
class DirectionSpec {
 public:
  DirectionSpec() = default;  // empty placeholder for deserialization
  DirectionSpec(std::vector<ScalarSpec> working, std::vector<int> perm, DirectionKind kind);

  int n() const { return static_cast<int>(working_.size()); }
  const std::vector<ScalarSpec>& working() const { return working_; }
  const std::vector<int>& perm() const { return perm_; }
  DirectionKind kind() const { return kind_; }
  bool is_identity_perm() const;

  // Entries arranged by original slot; this is the vector geometry sees.
  std::vector<ScalarSpec> fiber_entries() const;

  // Permutation matrix P with P * working = fiber ordering, as acting on
  // column vectors: row perm()[i], column i.
  std::vector<int> perm_matrix_cols() const { return perm_; }

 private:
  std::vector<ScalarSpec> working_;
  std::vector<int> perm_;
  DirectionKind kind_ = DirectionKind::rational;
};

// Normalizes a raw direction: picks the first entry with certified nonzero
// sign, swaps it to the front, divides through by it and classifies. All
// entries indeterminate-or-zero is rejected.
DirectionSpec normalize_direction(const std::vector<ScalarSpec>& raw);

}  // namespace tsq

#endif  // TSQ_DIRECTION_HPP
