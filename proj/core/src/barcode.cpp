// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/barcode.hpp"

#include <algorithm>

#include "tsq/error.hpp"

namespace tsq {

namespace {

bool bar_less(const Bar& a, const Bar& b) {
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.is_infinite() != b.is_infinite()) return !a.is_infinite();  // finite first
  if (a.is_infinite()) return false;
  return *a.death < *b.death;
}

}  // namespace

Bar::Bar(Rat birth_, Rat death_) : Bar(std::move(birth_), std::optional<Rat>(std::move(death_))) {}

Bar::Bar(Rat birth_, std::optional<Rat> death_)
    : birth(std::move(birth_)), death(std::move(death_)) {
  if (death.has_value() && !(birth < *death))
    fail(errc::invalid_input, "bar needs birth < death");
}

Rat Bar::half_length() const {
  if (is_infinite()) fail(errc::invalid_input, "half-length of an infinite bar");
  return (*death - birth) / Rat(2);
}

Barcode::Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
  std::sort(bars_.begin(), bars_.end(), bar_less);
}

Endpoints endpoints_multiset(const Barcode& b) {
  Endpoints e;
  for (const Bar& bar : b.bars()) {
    e.values.push_back(bar.birth);
    if (bar.is_infinite())
      ++e.infinite_count;
    else
      e.values.push_back(*bar.death);
  }
  std::sort(e.values.begin(), e.values.end());
  return e;
}

std::optional<Rat> min_marked_spectrum(const Barcode& b) {
  std::optional<Rat> best;
  for (const Bar& bar : b.bars())
    if (bar.is_infinite() && (!best || bar.birth < *best)) best = bar.birth;
  return best;
}

bool barcodes_equal(const Barcode& a, const Barcode& b) { return a == b; }

namespace {

Rat pair_cost(const Bar& a, const Bar& b) {  // finite bars only
  Rat db = (a.birth - b.birth).abs();
  Rat dd = (*a.death - *b.death).abs();
  return std::max(db, dd);
}

struct Split {
  std::vector<Bar> fin;
  std::vector<Rat> inf_births;  // sorted
};

Split split_bars(const Barcode& b) {
  Split s;
  for (const Bar& bar : b.bars()) {
    if (bar.is_infinite())
      s.inf_births.push_back(bar.birth);
    else
      s.fin.push_back(bar);
  }
  std::sort(s.inf_births.begin(), s.inf_births.end());
  return s;
}

// Min over perfect pairings of max |b - b'|; sorted pairing is optimal for
// points on a line.
Rat infinite_part(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat worst(0);
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a[i] - b[i]).abs());
  return worst;
}

// Kuhn augmenting-path matching on the diagonal-augmented bipartite graph.
// Left nodes: bars of A then one diagonal copy per bar of B. Right nodes:
// bars of B then one diagonal copy per bar of A.
class Feasibility {
 public:
  Feasibility(const std::vector<Bar>& a, const std::vector<Bar>& b)
      : a_(a), b_(b), na_(a.size()), nb_(b.size()) {}

  bool feasible(const Rat& eps) {
    const size_t left_n = na_ + nb_, right_n = nb_ + na_;
    adj_.assign(left_n, {});
    for (size_t i = 0; i < na_; ++i) {
      for (size_t j = 0; j < nb_; ++j)
        if (pair_cost(a_[i], b_[j]) <= eps) adj_[i].push_back(j);
      if (a_[i].half_length() <= eps) adj_[i].push_back(nb_ + i);  // own diagonal slot
    }
    for (size_t j = 0; j < nb_; ++j) {
      size_t left = na_ + j;  // diagonal copy that may absorb b_[j]
      if (b_[j].half_length() <= eps) adj_[left].push_back(j);
      for (size_t i = 0; i < na_; ++i) adj_[left].push_back(nb_ + i);  // diag-diag, free
    }
    match_right_.assign(right_n, -1);
    size_t matched = 0;
    for (size_t u = 0; u < left_n; ++u) {
      visited_.assign(right_n, false);
      if (augment(u)) ++matched;
    }
    return matched == left_n;
  }

 private:
  bool augment(size_t u) {
    for (size_t v : adj_[u]) {
      if (visited_[v]) continue;
      visited_[v] = true;
      if (match_right_[v] < 0 || augment(static_cast<size_t>(match_right_[v]))) {
        match_right_[v] = static_cast<long>(u);
        return true;
      }
    }
    return false;
  }

  const std::vector<Bar>& a_;
  const std::vector<Bar>& b_;
  size_t na_, nb_;
  std::vector<std::vector<size_t>> adj_;
  std::vector<long> match_right_;
  std::vector<char> visited_;
};

Rat finite_part(const std::vector<Bar>& a, const std::vector<Bar>& b) {
  if (a.empty() && b.empty()) return Rat(0);
  std::vector<Rat> candidates{Rat(0)};
  for (const Bar& x : a) candidates.push_back(x.half_length());
  for (const Bar& y : b) candidates.push_back(y.half_length());
  for (const Bar& x : a)
    for (const Bar& y : b) candidates.push_back(pair_cost(x, y));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Feasibility feas(a, b);
  size_t lo = 0, hi = candidates.size() - 1;
  if (feas.feasible(candidates[lo])) return candidates[lo];
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (feas.feasible(candidates[mid]))
      hi = mid;
    else
      lo = mid;
  }
  return candidates[hi];
}

}  // namespace

BotDistance bottleneck_distance_fast(const Barcode& a, const Barcode& b) {
  Split sa = split_bars(a), sb = split_bars(b);
  if (sa.inf_births.size() != sb.inf_births.size()) return {true, Rat(0)};
  Rat d_inf = infinite_part(sa.inf_births, sb.inf_births);
  Rat d_fin = finite_part(sa.fin, sb.fin);
  return {false, std::max(d_inf, d_fin)};
}

BotDistance bottleneck_distance(const Barcode& a, const Barcode& b) {
  if (a.size() + b.size() <= 10) return bottleneck_distance_brute(a, b);
  return bottleneck_distance_fast(a, b);
}

namespace {

struct BruteState {
  const std::vector<Bar>* a;
  const std::vector<Bar>* b;
  std::vector<char> used_b;
  std::optional<Rat> best;

  void consider(const Rat& candidate) {
    if (!best || candidate < *best) best = candidate;
  }

  void recurse(size_t i, const Rat& worst) {
    if (best && worst >= *best) return;  // prune
    if (i == a->size()) {
      Rat total = worst;
      for (size_t j = 0; j < b->size(); ++j)
        if (!used_b[j]) total = std::max(total, (*b)[j].half_length());
      consider(total);
      return;
    }
    // leave (*a)[i] unmatched
    recurse(i + 1, std::max(worst, (*a)[i].half_length()));
    for (size_t j = 0; j < b->size(); ++j) {
      if (used_b[j]) continue;
      used_b[j] = 1;
      recurse(i + 1, std::max(worst, pair_cost((*a)[i], (*b)[j])));
      used_b[j] = 0;
    }
  }
};

}  // namespace

BotDistance bottleneck_distance_brute(const Barcode& a, const Barcode& b) {
  Split sa = split_bars(a), sb = split_bars(b);
  if (sa.inf_births.size() != sb.inf_births.size()) return {true, Rat(0)};
  // Infinite bars pair exhaustively via permutation recursion on births.
  std::vector<char> used(sb.inf_births.size(), 0);
  std::optional<Rat> best_inf;
  struct PermRec {
    std::vector<Rat>* a;
    std::vector<Rat>* b;
    std::vector<char>* used;
    std::optional<Rat>* best;
    void run(size_t i, const Rat& worst) {
      if (*best && worst >= **best) return;
      if (i == a->size()) {
        if (!*best || worst < **best) *best = worst;
        return;
      }
      for (size_t j = 0; j < b->size(); ++j) {
        if ((*used)[j]) continue;
        (*used)[j] = 1;
        run(i + 1, std::max(worst, ((*a)[i] - (*b)[j]).abs()));
        (*used)[j] = 0;
      }
    }
  };
  Rat d_inf(0);
  if (!sa.inf_births.empty()) {
    PermRec rec{&sa.inf_births, &sb.inf_births, &used, &best_inf};
    rec.run(0, Rat(0));
    d_inf = *best_inf;
  }

  BruteState st;
  st.a = &sa.fin;
  st.b = &sb.fin;
  st.used_b.assign(sb.fin.size(), 0);
  st.recurse(0, Rat(0));
  return {false, std::max(d_inf, st.best.value_or(Rat(0)))};
}

}  // namespace tsq
