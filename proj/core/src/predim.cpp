#include "abinitio/predim.hpp"

#include <algorithm>
#include <climits>

namespace abinitio {

int s_value(const SStructure& a) {
  int s = 0;
  for (Mask k : maximal_clique_masks(a)) s += card_star(popcount(k), a.arity());
  return s;
}

int predim(const SStructure& a) { return static_cast<int>(a.size()) - s_value(a); }

int predim_rel(const SStructure& a, const VertexSet& b) {
  return predim(a) - predim(induced(a, a.mask_of(b)));
}

PredimTable::PredimTable(const SStructure& a)
    : arity_(a.arity()), size_(a.size()), cliques_(maximal_clique_masks(a)) {
  for (std::size_t i = 0; i < cliques_.size(); ++i) {
    support_ |= cliques_[i];
    for (std::size_t j = i + 1; j < cliques_.size(); ++j)
      if (popcount(cliques_[i] & cliques_[j]) >= arity_) small_meets_ = false;
  }
}

int PredimTable::s_value(Mask x) const {
  if (small_meets_) {
    int s = 0;
    for (Mask k : cliques_) s += card_star(popcount(k & x), arity_);
    return s;
  }
  // Traces may nest or coincide; keep only the inclusion-maximal ones.
  std::vector<Mask> traces;
  for (Mask k : cliques_) {
    const Mask t = k & x;
    if (popcount(t) >= arity_) traces.push_back(t);
  }
  std::sort(traces.begin(), traces.end(),
            [](Mask p, Mask q) { return popcount(p) != popcount(q) ? popcount(p) > popcount(q) : p < q; });
  int s = 0;
  std::vector<Mask> kept;
  for (Mask t : traces) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [&](Mask k) { return is_subset(t, k); });
    if (covered) continue;
    kept.push_back(t);
    s += card_star(popcount(t), arity_);
  }
  return s;
}

std::vector<int> PredimTable::all_predims() const {
  if (size_ > kMaxExhaustiveVertices)
    throw ResourceLimit("subset table over " + std::to_string(size_) + " vertices");
  const std::size_t total = std::size_t{1} << size_;
  std::vector<int> out(total);
  for (std::size_t m = 0; m < total; ++m) out[m] = predim(static_cast<Mask>(m));
  return out;
}

namespace {

bool better_witness(int value, Mask x, int best_value, Mask best) {
  if (value != best_value) return value < best_value;
  if (popcount(x) != popcount(best)) return popcount(x) < popcount(best);
  return x < best;
}

}  // namespace

StrengthResult strength(const PredimTable& t, Mask base, Mask within) {
  base &= t.full_mask();
  within &= t.full_mask();
  within |= base;
  const int base_value = t.predim(base);
  // A vertex outside every clique adds exactly 1 wherever it is added, so
  // it never lowers the minimum and can be left out of the search.
  const Mask candidates = within & ~base & t.clique_support();
  StrengthResult r;
  r.min_relative = 0;
  r.witness = base;
  for_each_submask(candidates, [&](Mask s) {
    const Mask x = base | s;
    const int rel = t.predim(x) - base_value;
    if (better_witness(rel, x, r.min_relative, r.witness)) {
      r.min_relative = rel;
      r.witness = x;
    }
  });
  r.strong = r.min_relative >= 0;
  return r;
}

StrengthResult is_strong_with_witness(const SStructure& a, const VertexSet& b) {
  const Mask base = a.mask_of(b);
  return strength(PredimTable(a), base);
}

bool is_strong(const SStructure& a, const VertexSet& b) {
  return is_strong_with_witness(a, b).strong;
}

Mask self_sufficient_closure(const PredimTable& t, Mask x) {
  x &= t.full_mask();
  Mask y = x;
  while (true) {
    const int current = t.predim(y);
    const Mask candidates = t.full_mask() & ~y & t.clique_support();
    bool found = false;
    Mask best = 0;
    for_each_submask(candidates, [&](Mask s) {
      if (s == 0) return;
      if (t.predim(y | s) >= current) return;
      if (!found || popcount(s) < popcount(best) || (popcount(s) == popcount(best) && s < best)) {
        best = s;
        found = true;
      }
    });
    if (!found) break;
    y |= best;
  }
  if (t.clique_intersections_small()) {
    // Submodularity makes the least minimizer over supersets of x the unique
    // smallest strong superset.
    int min_value = INT_MAX;
    Mask meet = t.full_mask();
    for_each_submask(t.full_mask() & ~x, [&](Mask s) {
      const int v = t.predim(x | s);
      if (v < min_value) {
        min_value = v;
        meet = x | s;
      } else if (v == min_value) {
        meet &= x | s;
      }
    });
    if (meet != y || t.predim(meet) != min_value)
      throw InvariantViolation("self-sufficient closure is not the least predim minimizer");
  }
  return y;
}

VertexSet self_sufficient_closure(const SStructure& a, const VertexSet& x) {
  const Mask m = a.mask_of(x);
  return a.vertices_of(self_sufficient_closure(PredimTable(a), m));
}

std::vector<int> dimension_table(const PredimTable& t) {
  std::vector<int> d = t.all_predims();
  const std::size_t n = t.size();
  const std::size_t total = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < total; ++m)
      if ((m & bit) == 0) d[m] = std::min(d[m], d[m | bit]);
  }
  return d;
}

}  // namespace abinitio
