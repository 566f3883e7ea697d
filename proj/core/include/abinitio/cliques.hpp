#ifndef ABINITIO_CLIQUES_HPP
#define ABINITIO_CLIQUES_HPP

#include <vector>

#include "abinitio/structure.hpp"

namespace abinitio {

/// Maximal cliques of a structure, each a vertex set of size >= arity,
/// listed in lexicographic order of their sorted vertex lists.
struct CliqueFamily {
  std::vector<VertexSet> members;

  friend bool operator==(const CliqueFamily&, const CliqueFamily&) = default;
};

/// True iff every arity-subset of k is an edge. Requires |k| >= arity.
bool is_clique(const SStructure& a, Mask k);

/// Checked variant. Throws std::invalid_argument if k leaves the universe or
/// is smaller than the arity.
bool is_clique(const SStructure& a, const VertexSet& k);

/// True iff adding vertex index v to clique-or-small set r keeps every arity-subset an edge.
bool extends_clique(const SStructure& a, Mask r, int v);

/// Maximal cliques as masks, sorted ascending by mask value.
std::vector<Mask> maximal_clique_masks(const SStructure& a);

CliqueFamily maximal_cliques(const SStructure& a);

/// Converts masks into a CliqueFamily in canonical (lexicographic) order.
CliqueFamily to_family(const SStructure& a, const std::vector<Mask>& masks);

}  // namespace abinitio

#endif  // ABINITIO_CLIQUES_HPP
