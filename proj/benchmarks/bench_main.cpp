// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "tsq/barcode.hpp"
#include "tsq/embedding.hpp"
#include "tsq/unimodular.hpp"

namespace {

using namespace tsq;

IntVec random_coprime(std::mt19937_64& rng, int n, long mag) {
  std::uniform_int_distribution<long> dist(-mag, mag);
  while (true) {
    IntVec p(n);
    for (int i = 0; i < n; ++i) p[i] = dist(rng);
    Int g = 0;
    for (const Int& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return p;
  }
}

void bm_unimodular_complete(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  std::vector<IntVec> tuples;
  for (int i = 0; i < 64; ++i) tuples.push_back(random_coprime(rng, n, 10000));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(unimodular_complete(tuples[i++ % tuples.size()]));
  }
}
BENCHMARK(bm_unimodular_complete)->Arg(3)->Arg(4)->Arg(6)->Arg(8);

void bm_embed_golden(benchmark::State& state) {
  DirectionSpec g = normalize_direction(
      {ScalarSpec(QSurd(Rat(1, 2), Rat(1, 2), 5)), ScalarSpec(Rat(1))});
  const Rat r(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed(g, r));
  }
}
BENCHMARK(bm_embed_golden)->Arg(10)->Arg(100)->Arg(1000);

void bm_simultaneous_approx(benchmark::State& state) {
  DirectionSpec v = normalize_direction({ScalarSpec(Rat(1)),
                                         ScalarSpec(sqrt_enclosure(Rat(2), 60)),
                                         ScalarSpec(sqrt_enclosure(Rat(3), 60))});
  const Int q(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simultaneous_approx(v, q));
  }
}
BENCHMARK(bm_simultaneous_approx)->Arg(8)->Arg(32)->Arg(128);

Barcode random_barcode(std::mt19937_64& rng, int bars) {
  std::uniform_int_distribution<long> coord(0, 400);
  std::vector<Bar> v;
  for (int i = 0; i < bars; ++i) {
    Rat b(coord(rng), 8);
    v.emplace_back(b, b + Rat(coord(rng) + 1, 8));
  }
  return Barcode(std::move(v));
}

void bm_bottleneck(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int bars = static_cast<int>(state.range(0));
  Barcode a = random_barcode(rng, bars);
  Barcode b = random_barcode(rng, bars);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bottleneck_distance_fast(a, b));
  }
}
BENCHMARK(bm_bottleneck)->Arg(8)->Arg(32)->Arg(128);

void bm_mat_det(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  std::uniform_int_distribution<long> dist(-1000, 1000);
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_det(m));
  }
}
BENCHMARK(bm_mat_det)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
