#ifndef ABINITIO_TESTS_HELPERS_HPP
#define ABINITIO_TESTS_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "abinitio/amalgam.hpp"
#include "abinitio/random.hpp"
#include "abinitio/structure.hpp"

namespace testing_helpers {

using abinitio::SStructure;
using abinitio::Vertex;
using abinitio::VertexSet;

inline VertexSet range(Vertex lo, Vertex hi) {
  VertexSet out;
  for (Vertex v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

inline SStructure make(int n, VertexSet universe, std::initializer_list<VertexSet> edges) {
  return SStructure(n, std::move(universe), std::vector<VertexSet>(edges));
}

// All n-subsets of `k` as edges.
inline SStructure clique(int n, const VertexSet& k, VertexSet universe = {}) {
  if (universe.empty()) universe = k;
  std::vector<VertexSet> edges;
  const std::size_t m = k.size();
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    if (static_cast<int>(__builtin_popcount(s)) != n) continue;
    VertexSet e;
    for (std::size_t i = 0; i < m; ++i)
      if ((s >> i) & 1U) e.push_back(k[i]);
    edges.push_back(e);
  }
  return SStructure(n, universe, edges);
}

// Two sides in class c over a common base on 1..b; side one continues with
// b+1..s1 and side two with ids above s1.
inline abinitio::AmalgamProblem random_problem(abinitio::ClassId c, int n, std::size_t side_max,
                                               abinitio::AmalgamKind kind, abinitio::Rng& rng) {
  using namespace abinitio;
  const std::size_t s1 = rng.below(side_max + 1);
  const std::size_t b = rng.below(s1 + 1);
  const std::size_t s2 = b + rng.below(side_max - b + 1);
  const SStructure base = random_structure(c, n, b, 0.2 + 0.5 * rng.unit(), rng.next());
  const std::vector<Mask> base_edges(base.edge_masks().begin(), base.edge_masks().end());
  VertexSet u2 = range(1, static_cast<Vertex>(b));
  for (std::size_t i = 0; i < s2 - b; ++i) u2.push_back(static_cast<Vertex>(s1 + 1 + i));
  const Mask frozen = low_mask(b);
  AmalgamProblem p;
  p.first = random_extension(SStructure::from_masks(n, range(1, static_cast<Vertex>(s1)), base_edges), frozen, c,
                             0.2 + 0.5 * rng.unit(), rng);
  p.second = random_extension(SStructure::from_masks(n, u2, base_edges), frozen, c, 0.2 + 0.5 * rng.unit(), rng);
  p.base = base.universe();
  p.kind = kind;
  return p;
}

}  // namespace testing_helpers

#endif
