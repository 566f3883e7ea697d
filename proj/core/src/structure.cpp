#include "abinitio/structure.hpp"

#include <algorithm>
#include <sstream>

namespace abinitio {

VertexSet make_vertex_set(std::initializer_list<Vertex> vs) {
  return make_vertex_set(VertexSet(vs));
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::string to_string(const VertexSet& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i != 0) os << ',';
    os << vs[i];
  }
  os << '}';
  return os.str();
}

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SStructure::SStructure(int arity) : arity_(arity) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
}

SStructure::SStructure(int arity, VertexSet universe, const std::vector<VertexSet>& edges)
    : arity_(arity), universe_(std::move(universe)) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  std::sort(universe_.begin(), universe_.end());
  if (std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
    throw std::invalid_argument("duplicate vertex in universe");
  if (universe_.size() > kMaxVertices)
    throw ResourceLimit("universe larger than " + std::to_string(kMaxVertices) + " vertices");
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.size() != static_cast<std::size_t>(arity))
      throw std::invalid_argument("edge " + to_string(e) + " does not have arity " +
                                  std::to_string(arity));
    Mask m = 0;
    for (Vertex v : e) {
      const int i = index_of(v);
      if (i < 0)
        throw std::invalid_argument("edge " + to_string(e) + " leaves the universe");
      m |= Mask{1} << i;
    }
    if (popcount(m) != arity)
      throw std::invalid_argument("edge " + to_string(e) + " repeats a vertex");
    edges_.push_back(m);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

SStructure SStructure::from_masks(int arity, VertexSet universe, std::vector<Mask> edges) {
  SStructure s(arity);
  if (universe.size() > kMaxVertices)
    throw ResourceLimit("universe larger than " + std::to_string(kMaxVertices) + " vertices");
  s.universe_ = std::move(universe);
  const Mask full = s.full_mask();
  for (Mask e : edges) {
    if (popcount(e) != arity || !is_subset(e, full))
      throw std::invalid_argument("edge mask does not denote an " + std::to_string(arity) +
                                  "-subset of the universe");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  s.edges_ = std::move(edges);
  return s;
}

std::vector<VertexSet> SStructure::edges() const {
  std::vector<VertexSet> out;
  out.reserve(edges_.size());
  for (Mask e : edges_) out.push_back(vertices_of(e));
  std::sort(out.begin(), out.end());
  return out;
}

bool SStructure::has_edge(Mask e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool SStructure::has_edge(const VertexSet& e) const {
  if (e.size() != static_cast<std::size_t>(arity_)) return false;
  Mask m = 0;
  for (Vertex v : e) {
    const int i = index_of(v);
    if (i < 0) return false;
    m |= Mask{1} << i;
  }
  return has_edge(m);
}

int SStructure::index_of(Vertex v) const noexcept {
  const auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
  if (it == universe_.end() || *it != v) return -1;
  return static_cast<int>(it - universe_.begin());
}

Mask SStructure::mask_of(const VertexSet& vs) const {
  Mask m = 0;
  for (Vertex v : vs) {
    const int i = index_of(v);
    if (i < 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the universe");
    m |= Mask{1} << i;
  }
  return m;
}

VertexSet SStructure::vertices_of(Mask m) const {
  VertexSet out;
  for_each_bit(m, [&](int i) { out.push_back(universe_[static_cast<std::size_t>(i)]); });
  return out;
}

SStructure induced(const SStructure& a, Mask subset) {
  subset &= a.full_mask();
  // Position of each kept vertex in the compressed universe.
  std::vector<int> pos(a.size(), -1);
  int next = 0;
  for_each_bit(subset, [&](int i) { pos[static_cast<std::size_t>(i)] = next++; });
  std::vector<Mask> edges;
  for (Mask e : a.edge_masks()) {
    if (!is_subset(e, subset)) continue;
    Mask c = 0;
    for_each_bit(e, [&](int i) { c |= Mask{1} << pos[static_cast<std::size_t>(i)]; });
    edges.push_back(c);
  }
  return SStructure::from_masks(a.arity(), a.vertices_of(subset), std::move(edges));
}

SStructure induced(const SStructure& a, const VertexSet& subset) {
  return induced(a, a.mask_of(subset));
}

SStructure relabel(const SStructure& a, const std::map<Vertex, Vertex>& rename) {
  auto map = [&](Vertex v) {
    const auto it = rename.find(v);
    return it == rename.end() ? v : it->second;
  };
  VertexSet universe;
  universe.reserve(a.size());
  for (Vertex v : a.universe()) universe.push_back(map(v));
  std::vector<VertexSet> edges;
  for (const auto& e : a.edges()) {
    VertexSet m;
    for (Vertex v : e) m.push_back(map(v));
    edges.push_back(make_vertex_set(std::move(m)));
  }
  return SStructure(a.arity(), std::move(universe), edges);
}

SStructure with_edges(const SStructure& a, std::span<const Mask> extra) {
  std::vector<Mask> edges(a.edge_masks().begin(), a.edge_masks().end());
  edges.insert(edges.end(), extra.begin(), extra.end());
  return SStructure::from_masks(a.arity(), a.universe(), std::move(edges));
}

}  // namespace abinitio
