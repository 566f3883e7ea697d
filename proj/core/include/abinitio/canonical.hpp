#ifndef ABINITIO_CANONICAL_HPP
#define ABINITIO_CANONICAL_HPP

#include <vector>

#include "abinitio/structure.hpp"

namespace abinitio {

inline constexpr std::size_t kDefaultCanonicalCap = 10;

/// Canonical vertex order: result[label] is the universe index placed at that label.
/// Vertices in `fixed` keep their relative order at the front. Isomorphic
/// structures (by isomorphisms fixing `fixed` pointwise, in order) receive
/// orders yielding identical relabelled edge sets.
std::vector<int> canonical_order(const SStructure& a, Mask fixed = 0);

/// Relabels the universe to 1..|A| so that isomorphic structures coincide.
/// Throws ResourceLimit when |A| exceeds `cap`.
SStructure canonical_form(const SStructure& a, std::size_t cap = kDefaultCanonicalCap);

/// Canonical form relative to a base fixed pointwise: base vertices keep their
/// identifiers, the remaining vertices are renamed max(base)+1, max(base)+2, ...
/// (1, 2, ... for an empty base) in canonical order.
SStructure canonical_form_over(const SStructure& a, const VertexSet& base,
                               std::size_t cap = kDefaultCanonicalCap);

bool isomorphic(const SStructure& a, const SStructure& b, std::size_t cap = kDefaultCanonicalCap);

}  // namespace abinitio

#endif  // ABINITIO_CANONICAL_HPP
