#ifndef ABINITIO_AMALGAM_HPP
#define ABINITIO_AMALGAM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "abinitio/structure.hpp"

namespace abinitio {

enum class AmalgamKind { Standard, Geometric };

/// Two structures glued along a common induced substructure on `base`.
/// Vertices of `second` outside the base that collide with `first` are
/// renamed to fresh identifiers before gluing.
struct AmalgamProblem {
  SStructure first;
  SStructure second;
  VertexSet base;
  AmalgamKind kind = AmalgamKind::Standard;
};

struct AmalgamResult {
  SStructure amalgam;
  /// Renaming applied to `second`; vertices not listed kept their identifier.
  std::map<Vertex, Vertex> second_renamed;
  /// The clique family the amalgam was built from, as sorted vertex sets.
  std::vector<VertexSet> declared_cliques;
};

/**
 * Builds the amalgam from its declared maximal-clique family and validates it.
 *
 * Standard: cliques meeting the base in fewer than n points survive, and
 * cliques of the two sides sharing at least n points are merged. Requires both
 * sides in CLQ0; asserts predim(D) - predim(first) = predim(second) - predim(base),
 * and membership in CLQ when both sides are in CLQ and the base is strong in both.
 *
 * Geometric: cliques of the two sides sharing at least n-1 points are merged;
 * a clique survives alone when it meets every clique of the other side in
 * fewer than n-1 points. Requires both sides in GEO; asserts the result is in
 * CLQ, and in GEO when the base is strong in either side.
 *
 * Throws std::invalid_argument (with witness) on a precondition failure and
 * InvariantViolation if a postcondition fails.
 */
AmalgamResult amalgamate(const AmalgamProblem& p);

SStructure standard_amalgam(const AmalgamProblem& p);
SStructure geometric_amalgam(const AmalgamProblem& p);

/// Replaces the substructure `replaced` of `whole` by `replacement`, which
/// lives on the same universe and carries the same geometry. Requires
/// `whole`, `replaced` in SYM with `replaced` strong in `whole` and
/// `replacement` in CLQ. Asserts the replacement is strong in the result and
/// that the geometry of `whole` is unchanged.
SStructure surgery(const SStructure& whole, const SStructure& replaced, const SStructure& replacement);

/// Exhaustive search for B in CLQ extending `base_structure` strongly, with
/// small sets independent in G(B) and G(B)^geo equal to `target`. Candidates
/// are ordered by number of added edges, then colexicographically over the
/// added n-subsets (in lexicographic order). Throws ResourceLimit when the
/// candidate count exceeds `budget`.
std::optional<SStructure> mixed_extension_search(const SStructure& base_structure,
                                                 const SStructure& target, std::uint64_t budget);

}  // namespace abinitio

#endif  // ABINITIO_AMALGAM_HPP
