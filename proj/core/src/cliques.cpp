#include "abinitio/cliques.hpp"

#include <algorithm>

namespace abinitio {

bool is_clique(const SStructure& a, Mask k) {
  bool ok = true;
  for_each_k_submask(k, a.arity(), [&](Mask e) {
    if (ok && !a.has_edge(e)) ok = false;
  });
  return ok;
}

bool is_clique(const SStructure& a, const VertexSet& k) {
  const Mask m = a.mask_of(k);
  if (popcount(m) < a.arity())
    throw std::invalid_argument("clique candidate " + to_string(k) + " has fewer than " +
                                std::to_string(a.arity()) + " vertices");
  return is_clique(a, m);
}

bool extends_clique(const SStructure& a, Mask r, int v) {
  const int n = a.arity();
  if (popcount(r) < n - 1) return true;
  const Mask bit = Mask{1} << v;
  bool ok = true;
  for_each_k_submask(r, n - 1, [&](Mask s) {
    if (ok && !a.has_edge(s | bit)) ok = false;
  });
  return ok;
}

namespace {

// Bron-Kerbosch over the hereditary family of sets all of whose arity-subsets
// are edges. Candidate and excluded sets are recomputed against the grown
// clique because extension is not a pairwise relation for arity > 2.
void bron_kerbosch(const SStructure& a, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    if (popcount(r) >= a.arity()) out.push_back(r);
    return;
  }
  while (p != 0) {
    const int v = std::countr_zero(p);
    const Mask bit = Mask{1} << v;
    const Mask grown = r | bit;
    Mask np = 0;
    Mask nx = 0;
    for_each_bit(p & ~bit, [&](int u) {
      if (extends_clique(a, grown, u)) np |= Mask{1} << u;
    });
    for_each_bit(x, [&](int u) {
      if (extends_clique(a, grown, u)) nx |= Mask{1} << u;
    });
    bron_kerbosch(a, grown, np, nx, out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<Mask> maximal_clique_masks(const SStructure& a) {
  std::vector<Mask> out;
  if (a.edge_count() == 0) return out;
  // Only vertices lying on some edge can be in a clique.
  Mask touched = 0;
  for (Mask e : a.edge_masks()) touched |= e;
  bron_kerbosch(a, 0, touched, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

CliqueFamily to_family(const SStructure& a, const std::vector<Mask>& masks) {
  CliqueFamily f;
  f.members.reserve(masks.size());
  for (Mask m : masks) f.members.push_back(a.vertices_of(m));
  std::sort(f.members.begin(), f.members.end());
  return f;
}

CliqueFamily maximal_cliques(const SStructure& a) { return to_family(a, maximal_clique_masks(a)); }

}  // namespace abinitio
