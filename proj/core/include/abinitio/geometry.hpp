#ifndef ABINITIO_GEOMETRY_HPP
#define ABINITIO_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "abinitio/structure.hpp"

namespace abinitio {

enum class GeometryKind { Geometry, Pregeometry };

/**
 * Finite (pre)geometry given by its full rank table.
 *
 * rank_table()[X] is the dimension of the subset X (mask over the sorted
 * universe). Construction validates the matroid rank axioms in their local
 * form: rank(0) = 0, unit increase, and local submodularity
 * r(X+a) + r(X+b) >= r(X+a+b) + r(X). The kind is Geometry exactly when
 * every singleton has rank 1 and is closed.
 */
class Geometry {
 public:
  Geometry(VertexSet universe, std::vector<std::uint8_t> rank);

  const VertexSet& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  Mask full_mask() const noexcept { return low_mask(universe_.size()); }
  GeometryKind kind() const noexcept { return kind_; }
  bool is_geometry() const noexcept { return kind_ == GeometryKind::Geometry; }

  int rank(Mask x) const { return rank_[x & full_mask()]; }
  int rank(const VertexSet& x) const { return rank(mask_of(x)); }
  std::span<const std::uint8_t> rank_table() const noexcept { return rank_; }

  /// {a : rank(X + a) = rank(X)}.
  Mask closure(Mask x) const;

  Mask mask_of(const VertexSet& vs) const;
  VertexSet vertices_of(Mask m) const;

  /// Subgeometry on a subset: same ranks, smaller universe.
  Geometry restrict_to(Mask subset) const;

  friend bool operator==(const Geometry&, const Geometry&) = default;

 private:
  VertexSet universe_;
  std::vector<std::uint8_t> rank_;
  GeometryKind kind_ = GeometryKind::Geometry;
};

struct GeometryOptions {
  /// Largest family size for the post-construction flatness check; 0 disables it.
  int flatness_k_max = 0;
};

/// Geometry associated with a structure: rank(X) = min predim(Y) over X <= Y.
/// Requires arity >= 3 and every singleton strong; throws std::invalid_argument
/// naming the offending vertex otherwise.
Geometry geometry_of(const SStructure& a, const GeometryOptions& opts = {});

VertexSet closure(const Geometry& g, const VertexSet& x);

/// Closed subsets ordered by size, then mask; a linear extension of inclusion.
struct FlatFamily {
  std::vector<Mask> flats;
};

FlatFamily flats(const Geometry& g);

struct FlatnessResult {
  bool flat = true;
  std::vector<VertexSet> witness;  // first violating family
  int sum = 0;                     // its signed inclusion-exclusion sum

  explicit operator bool() const noexcept { return flat; }
};

/// Signed inclusion-exclusion sum over a family of flats, with the empty
/// intersection read as the closure of the union.
int flatness_sum(const Geometry& g, std::span<const Mask> family);

/// Checks the flatness inequality for every family of at most k_max distinct
/// flats. Families with a nested pair reduce to smaller families and families
/// with an independent union sum to zero, so both are skipped.
FlatnessResult flatness_check(const Geometry& g, int k_max);

/// Largest m such that every m-subset is independent.
int purity(const Geometry& g);

/// Every subset of at most n-1 points is independent, i.e. purity >= min(n-1, |G|).
bool small_sets_independent(const Geometry& g, int n);

/// Structure whose edges are the dependent n-subsets. Asserts the result lies in CLQ0.
SStructure dependent_n_structure(const Geometry& g, int n);

struct GeoOperatorOptions {
  int flatness_k_max = 0;
};

/// Structure whose maximal cliques are the closures of (n-1)-subsets that are
/// not themselves closed. Requires a geometry in which every (n-1)-subset is
/// independent. Asserts that the declared cliques are the maximal cliques.
SStructure geo_operator(const Geometry& g, int n, const GeoOperatorOptions& opts = {});

/// Declared clique family of geo_operator, as masks.
std::vector<Mask> geo_operator_cliques(const Geometry& g, int n);

/// Equality of rank tables. Throws std::invalid_argument on universe mismatch.
bool geometries_equal(const Geometry& a, const Geometry& b);

}  // namespace abinitio

#endif  // ABINITIO_GEOMETRY_HPP
