#ifndef ABINITIO_STRUCTURE_HPP
#define ABINITIO_STRUCTURE_HPP

#include <map>
#include <span>
#include <vector>

#include "abinitio/types.hpp"

namespace abinitio {

/**
 * Finite structure carrying one symmetric irreflexive n-ary relation.
 *
 * The relation is stored as the set of its n-element supports; the tuple
 * relation is the orbit of each stored edge under all n! permutations.
 * Edges are kept as masks over the sorted universe, sorted ascending, so two
 * structures compare equal iff arity, universe and edge set agree.
 */
class SStructure {
 public:
  SStructure() = default;
  explicit SStructure(int arity);

  /// Validating constructor. Throws std::invalid_argument on a malformed edge.
  SStructure(int arity, VertexSet universe, const std::vector<VertexSet>& edges);

  /// Builds from masks over `universe` (which must already be sorted and unique).
  static SStructure from_masks(int arity, VertexSet universe, std::vector<Mask> edges);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return universe_.size(); }
  bool empty() const noexcept { return universe_.empty(); }
  const VertexSet& universe() const noexcept { return universe_; }
  Mask full_mask() const noexcept { return low_mask(universe_.size()); }

  std::span<const Mask> edge_masks() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges as sorted vertex lists, in lexicographic order.
  std::vector<VertexSet> edges() const;

  bool has_edge(Mask e) const noexcept;
  bool has_edge(const VertexSet& e) const;

  bool contains(Vertex v) const noexcept { return index_of(v) >= 0; }
  int index_of(Vertex v) const noexcept;
  Vertex vertex_at(int i) const { return universe_.at(static_cast<std::size_t>(i)); }

  /// Mask of a vertex set; throws std::invalid_argument if it leaves the universe.
  Mask mask_of(const VertexSet& vs) const;
  VertexSet vertices_of(Mask m) const;

  Vertex max_vertex() const noexcept { return universe_.empty() ? 0 : universe_.back(); }

  friend bool operator==(const SStructure&, const SStructure&) = default;

 private:
  int arity_ = 3;
  VertexSet universe_;
  std::vector<Mask> edges_;
};

/// Induced substructure on a subset of the universe.
SStructure induced(const SStructure& a, Mask subset);
SStructure induced(const SStructure& a, const VertexSet& subset);

/// Renames vertices through `rename`; vertices missing from the map keep their id.
SStructure relabel(const SStructure& a, const std::map<Vertex, Vertex>& rename);

/// Structure with the same universe and the given edge masks added.
SStructure with_edges(const SStructure& a, std::span<const Mask> extra);

/// Binomial coefficient for small arguments.
std::uint64_t binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace abinitio

#endif  // ABINITIO_STRUCTURE_HPP
