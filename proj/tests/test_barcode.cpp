// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>

#include "tsq/barcode.hpp"
#include "tsq/error.hpp"

using namespace tsq;

namespace {

Barcode bc(std::initializer_list<std::pair<long, long>> finite, std::initializer_list<long> inf = {}) {
  std::vector<Bar> bars;
  for (auto [b, d] : finite) bars.emplace_back(Rat(b), Rat(d));
  for (long b : inf) bars.emplace_back(Rat(b), std::nullopt);
  return Barcode(std::move(bars));
}

Barcode random_barcode(std::mt19937_64& rng, int max_bars, bool allow_infinite = false) {
  std::uniform_int_distribution<int> count(0, max_bars);
  std::uniform_int_distribution<long> coord(0, 40);
  std::vector<Bar> bars;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Rat b(coord(rng), 4);
    Rat len(coord(rng) + 1, 4);
    if (allow_infinite && coord(rng) < 6)
      bars.emplace_back(b, std::nullopt);
    else
      bars.emplace_back(b, b + len);
  }
  return Barcode(std::move(bars));
}

}  // namespace

TEST_CASE("degenerate bars are rejected") {
  CHECK_THROWS_AS(Bar(Rat(1), Rat(1)), Error);
  CHECK_THROWS_AS(Bar(Rat(2), Rat(1)), Error);
  CHECK_NOTHROW(Bar(Rat(1), std::nullopt));
}

TEST_CASE("endpoint multisets") {
  Endpoints e = endpoints_multiset(bc({{1, 2}, {3, 4}}));
  CHECK(e.values == std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK(e.infinite_count == 0);

  Endpoints empty = endpoints_multiset(bc({}));
  CHECK(empty.values.empty());
  CHECK(empty.infinite_count == 0);

  Endpoints inf = endpoints_multiset(bc({{1, 2}}, {3}));
  CHECK(inf.values == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
  CHECK(inf.infinite_count == 1);
}

TEST_CASE("minimal marked spectrum") {
  CHECK(*min_marked_spectrum(bc({{1, 2}}, {3})) == Rat(3));
  CHECK_FALSE(min_marked_spectrum(bc({{1, 2}})).has_value());
  CHECK(*min_marked_spectrum(bc({{4, 9}}, {5, 3})) == Rat(3));
}

TEST_CASE("barcode equality is multiset equality") {
  CHECK(barcodes_equal(bc({{1, 2}, {3, 4}}), bc({{3, 4}, {1, 2}})));
  CHECK_FALSE(barcodes_equal(bc({{1, 2}, {3, 4}}), bc({{1, 4}, {2, 3}})));
  CHECK(barcodes_equal(bc({}), bc({})));
}

TEST_CASE("bottleneck distance anchors") {
  Barcode b1 = bc({{1, 2}, {3, 4}});
  CHECK(bottleneck_distance(b1, b1) == BotDistance{false, Rat(0)});

  // the endpoint-sharing pair: distance 3/2 from the [1,4) half-length
  Barcode b2 = bc({{1, 4}, {2, 3}});
  BotDistance d = bottleneck_distance(b1, b2);
  CHECK_FALSE(d.infinite);
  CHECK(d.value == Rat(3, 2));
  // same endpoint multisets, different barcodes
  Endpoints e1 = endpoints_multiset(b1), e2 = endpoints_multiset(b2);
  CHECK(e1.values == e2.values);
  CHECK_FALSE(barcodes_equal(b1, b2));
}

TEST_CASE("unmatched bars pay half their length") {
  BotDistance d = bottleneck_distance(bc({{0, 2}}), bc({}));
  CHECK(d.value == Rat(1));
  CHECK_FALSE(d.infinite);
}

TEST_CASE("infinite bars must pair with infinite bars") {
  BotDistance d = bottleneck_distance(bc({}, {3}), bc({}));
  CHECK(d.infinite);
  BotDistance d2 = bottleneck_distance(bc({}, {3}), bc({}, {5}));
  CHECK_FALSE(d2.infinite);
  CHECK(d2.value == Rat(2));
  BotDistance d3 = bottleneck_distance(bc({{1, 7}}, {3}), bc({{1, 7}}, {3}));
  CHECK(d3.value == Rat(0));
}

TEST_CASE("brute force and fast matcher agree on random instances") {
  std::mt19937_64 rng(1290);
  for (int t = 0; t < 1000; ++t) {
    Barcode a = random_barcode(rng, 8, t % 3 == 0);
    Barcode b = random_barcode(rng, 8, t % 3 == 0);
    BotDistance brute = bottleneck_distance_brute(a, b);
    BotDistance fast = bottleneck_distance_fast(a, b);
    CHECK(brute.infinite == fast.infinite);
    if (!brute.infinite) CHECK(brute.value == fast.value);
  }
}

TEST_CASE("pseudometric: symmetry and triangle inequality on random triples") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 1000; ++t) {
    Barcode a = random_barcode(rng, 6);
    Barcode b = random_barcode(rng, 6);
    Barcode c = random_barcode(rng, 6);
    BotDistance ab = bottleneck_distance(a, b);
    BotDistance ba = bottleneck_distance(b, a);
    BotDistance ac = bottleneck_distance(a, c);
    BotDistance cb = bottleneck_distance(c, b);
    CHECK(ab.value == ba.value);
    CHECK(ab.value <= ac.value + cb.value);
  }
}

TEST_CASE("zero distance forces equality and equal endpoints") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    Barcode a = random_barcode(rng, 6, true);
    std::vector<Bar> shuffled = a.bars();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Barcode b(std::move(shuffled));
    BotDistance d = bottleneck_distance(a, b);
    CHECK_FALSE(d.infinite);
    CHECK(d.value == Rat(0));
    CHECK(barcodes_equal(a, b));
    Endpoints ea = endpoints_multiset(a), eb = endpoints_multiset(b);
    CHECK(ea.values == eb.values);
    CHECK(ea.infinite_count == eb.infinite_count);

    // and any perturbation by more than zero separates them
    if (!a.bars().empty()) {
      std::vector<Bar> moved = a.bars();
      moved[0] = Bar(moved[0].birth + Rat(1, 3),
                     moved[0].is_infinite() ? std::optional<Rat>() : *moved[0].death + Rat(1, 3));
      Barcode m(std::move(moved));
      CHECK(bottleneck_distance(a, m).value > Rat(0));
    }
  }
}

TEST_CASE("deleting a bar moves the distance by at most its half-length") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    Barcode a = random_barcode(rng, 6);
    Barcode b = random_barcode(rng, 6);
    if (a.bars().empty()) continue;
    std::vector<Bar> del = a.bars();
    Bar removed = del.back();
    del.pop_back();
    Barcode a2(std::move(del));
    Rat d1 = bottleneck_distance(a, b).value;
    Rat d2 = bottleneck_distance(a2, b).value;
    Rat diff = (d1 - d2).abs();
    CHECK(diff <= removed.half_length());
  }
}
