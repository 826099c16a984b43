// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_JSON_IO_HPP
#define TSQ_JSON_IO_HPP

#include <json.hpp>

#include "tsq/barcode.hpp"
#include "tsq/diophantine.hpp"
#include "tsq/embedding.hpp"
#include "tsq/geometry.hpp"
#include "tsq/unimodular.hpp"

namespace tsq {

// Insertion-ordered JSON keeps output byte-stable across runs.
using Json = nlohmann::ordered_json;

// Rationals ride as canonical "num/den" strings. Scalars are distinguished
// by shape: a string is a Rat (decimal literals become enclosures with the
// literal's own radius), {"a","b","d"} is a surd, {"lo","hi"} an interval.
Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json scalar_to_json(const ScalarSpec& x);
ScalarSpec scalar_from_json(const Json& j);

Json direction_to_json(const DirectionSpec& v);
// Accepts the serialized form or a bare entry array; entries are
// re-normalized, which is stable on already-normalized input.
DirectionSpec direction_from_json(const Json& j);

Json approx_step_to_json(const ApproxStep& s);

Json extent_to_json(const Extent& e);

Json certificate_to_json(const EmbeddingCertificate& c);
EmbeddingCertificate certificate_from_json(const Json& j);

Json barcode_to_json(const Barcode& b);
Barcode barcode_from_json(const Json& j);

Json map_point_to_json(const MapPoint& p);
MapPoint map_point_from_json(const Json& j);

Json bot_distance_to_json(const BotDistance& d);

// Integer matrices/vectors; `strings` selects string entries (certificate
// schema) over plain numbers (completion schema).
Json intvec_to_json(const IntVec& v, bool strings);
IntVec intvec_from_json(const Json& j);
Json intmat_to_json(const IntMat& m, bool strings);
IntMat intmat_from_json(const Json& j);

Json completion_to_json(const CompletionTrace& trace, bool include_trace);

}  // namespace tsq

#endif  // TSQ_JSON_IO_HPP
