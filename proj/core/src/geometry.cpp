#include "abinitio/geometry.hpp"

#include <algorithm>

#include "abinitio/classes.hpp"
#include "abinitio/cliques.hpp"
#include "abinitio/predim.hpp"

namespace abinitio {

Geometry::Geometry(VertexSet universe, std::vector<std::uint8_t> rank)
    : universe_(std::move(universe)), rank_(std::move(rank)) {
  if (!std::is_sorted(universe_.begin(), universe_.end()) ||
      std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
    throw std::invalid_argument("geometry universe must be sorted and duplicate-free");
  const std::size_t m = universe_.size();
  if (m > kMaxExhaustiveVertices)
    throw ResourceLimit("rank table over " + std::to_string(m) + " vertices");
  const std::size_t total = std::size_t{1} << m;
  if (rank_.size() != total)
    throw std::invalid_argument("rank table has " + std::to_string(rank_.size()) +
                                " entries, expected " + std::to_string(total));
  if (rank_[0] != 0) throw std::invalid_argument("rank of the empty set is not 0");
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t a = std::size_t{1} << i;
      if ((x & a) != 0) continue;
      const int rx = rank_[x];
      const int rxa = rank_[x | a];
      if (rxa < rx || rxa > rx + 1)
        throw std::invalid_argument("rank is not unit-increasing at " +
                                    to_string(vertices_of(static_cast<Mask>(x | a))));
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::size_t b = std::size_t{1} << j;
        if ((x & b) != 0) continue;
        if (rank_[x | a] + rank_[x | b] < rank_[x | a | b] + rx)
          throw std::invalid_argument("rank is not submodular at " +
                                      to_string(vertices_of(static_cast<Mask>(x | a | b))));
      }
    }
  }
  kind_ = GeometryKind::Geometry;
  for (std::size_t i = 0; i < m && kind_ == GeometryKind::Geometry; ++i) {
    if (rank_[std::size_t{1} << i] != 1) kind_ = GeometryKind::Pregeometry;
    for (std::size_t j = i + 1; j < m; ++j)
      if (rank_[(std::size_t{1} << i) | (std::size_t{1} << j)] != 2) kind_ = GeometryKind::Pregeometry;
  }
}

Mask Geometry::closure(Mask x) const {
  x &= full_mask();
  const int r = rank_[x];
  Mask out = x;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    const Mask a = Mask{1} << i;
    if ((x & a) == 0 && rank_[x | a] == r) out |= a;
  }
  return out;
}

Mask Geometry::mask_of(const VertexSet& vs) const {
  Mask m = 0;
  for (Vertex v : vs) {
    const auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
    if (it == universe_.end() || *it != v)
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the geometry");
    m |= Mask{1} << (it - universe_.begin());
  }
  return m;
}

VertexSet Geometry::vertices_of(Mask m) const {
  VertexSet out;
  for_each_bit(m, [&](int i) { out.push_back(universe_[static_cast<std::size_t>(i)]); });
  return out;
}

Geometry Geometry::restrict_to(Mask subset) const {
  subset &= full_mask();
  const int k = popcount(subset);
  std::vector<int> bits;
  for_each_bit(subset, [&](int i) { bits.push_back(i); });
  std::vector<std::uint8_t> r(std::size_t{1} << k);
  for (std::size_t local = 0; local < r.size(); ++local) {
    Mask global = 0;
    for (int j = 0; j < k; ++j)
      if ((local >> j) & 1U) global |= Mask{1} << bits[static_cast<std::size_t>(j)];
    r[local] = rank_[global];
  }
  return Geometry(vertices_of(subset), std::move(r));
}

Geometry geometry_of(const SStructure& a, const GeometryOptions& opts) {
  if (a.arity() < 3)
    throw std::invalid_argument("geometry extraction needs arity at least 3");
  if (a.size() > kMaxExhaustiveVertices)
    throw ResourceLimit("geometry of a structure with " + std::to_string(a.size()) + " vertices");
  const PredimTable t(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const StrengthResult r = strength(t, Mask{1} << i);
    if (!r.strong)
      throw std::invalid_argument("singleton {" + std::to_string(a.vertex_at(static_cast<int>(i))) +
                                  "} is not strong; witness " + to_string(a.vertices_of(r.witness)));
  }
  const std::vector<int> d = dimension_table(t);
  std::vector<std::uint8_t> rank(d.size());
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (d[x] < 0 || d[x] > 255)
      throw InvariantViolation("dimension out of range on " + to_string(a.vertices_of(static_cast<Mask>(x))));
    rank[x] = static_cast<std::uint8_t>(d[x]);
  }
  try {
    Geometry g(a.universe(), std::move(rank));
    if (opts.flatness_k_max > 0 && g.is_geometry()) {
      const FlatnessResult f = flatness_check(g, opts.flatness_k_max);
      if (!f.flat) throw InvariantViolation("associated geometry is not flat");
    }
    return g;
  } catch (const std::invalid_argument& e) {
    throw InvariantViolation(std::string("associated dimension is not a matroid rank: ") + e.what());
  }
}

VertexSet closure(const Geometry& g, const VertexSet& x) {
  return g.vertices_of(g.closure(g.mask_of(x)));
}

FlatFamily flats(const Geometry& g) {
  FlatFamily f;
  for_each_submask(g.full_mask(), [&](Mask x) {
    if (g.closure(x) == x) f.flats.push_back(x);
  });
  std::sort(f.flats.begin(), f.flats.end(), [](Mask p, Mask q) {
    return popcount(p) != popcount(q) ? popcount(p) < popcount(q) : p < q;
  });
  return f;
}

int flatness_sum(const Geometry& g, std::span<const Mask> family) {
  const std::size_t k = family.size();
  Mask all = 0;
  for (Mask e : family) all |= e;
  int sum = g.rank(g.closure(all));
  for (std::size_t s = 1; s < (std::size_t{1} << k); ++s) {
    Mask meet = g.full_mask();
    for (std::size_t i = 0; i < k; ++i)
      if ((s >> i) & 1U) meet &= family[i];
    const int sign = (std::popcount(s) % 2 == 0) ? 1 : -1;
    sum += sign * g.rank(meet);
  }
  return sum;
}

namespace {

bool search_families(const Geometry& g, const std::vector<Mask>& fl, std::size_t start, int k_left,
                     std::vector<Mask>& family, FlatnessResult& out) {
  if (!family.empty()) {
    Mask all = 0;
    for (Mask e : family) all |= e;
    if (g.rank(all) != popcount(all)) {
      const int s = flatness_sum(g, family);
      if (s > 0) {
        out.flat = false;
        out.sum = s;
        for (Mask e : family) out.witness.push_back(g.vertices_of(e));
        return true;
      }
    }
  }
  if (k_left == 0) return false;
  for (std::size_t i = start; i < fl.size(); ++i) {
    const Mask e = fl[i];
    const bool nested = std::any_of(family.begin(), family.end(),
                                    [&](Mask f) { return is_subset(f, e) || is_subset(e, f); });
    if (nested) continue;
    family.push_back(e);
    if (search_families(g, fl, i + 1, k_left - 1, family, out)) return true;
    family.pop_back();
  }
  return false;
}

}  // namespace

FlatnessResult flatness_check(const Geometry& g, int k_max) {
  FlatnessResult out;
  if (k_max <= 0) return out;
  const FlatFamily f = flats(g);
  std::vector<Mask> family;
  search_families(g, f.flats, 0, k_max, family, out);
  return out;
}

int purity(const Geometry& g) {
  int smallest_dependent = static_cast<int>(g.size()) + 1;
  for_each_submask(g.full_mask(), [&](Mask x) {
    const int c = popcount(x);
    if (c < smallest_dependent && g.rank(x) < c) smallest_dependent = c;
  });
  return smallest_dependent - 1;
}

bool small_sets_independent(const Geometry& g, int n) {
  return purity(g) >= std::min<int>(n - 1, static_cast<int>(g.size()));
}

SStructure dependent_n_structure(const Geometry& g, int n) {
  std::vector<Mask> edges;
  for_each_k_submask(g.full_mask(), n, [&](Mask x) {
    if (g.rank(x) < n) edges.push_back(x);
  });
  SStructure s = SStructure::from_masks(n, g.universe(), std::move(edges));
  if (const Membership m = class_member(s, ClassId::CLQ0); !m)
    throw InvariantViolation("dependent " + std::to_string(n) + "-subsets do not form a CLQ0 structure: " +
                             m.reason);
  return s;
}

std::vector<Mask> geo_operator_cliques(const Geometry& g, int n) {
  std::vector<Mask> out;
  for_each_k_submask(g.full_mask(), n - 1, [&](Mask b) {
    const Mask c = g.closure(b);
    if (c != b) out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SStructure geo_operator(const Geometry& g, int n, const GeoOperatorOptions& opts) {
  if (n < 2) throw std::invalid_argument("arity must be at least 2");
  if (!g.is_geometry())
    throw std::invalid_argument("geo operator needs a geometry, got a pregeometry");
  if (!small_sets_independent(g, n))
    throw std::invalid_argument("geometry has a dependent set of at most " + std::to_string(n - 1) +
                                " points (purity " + std::to_string(purity(g)) + ")");
  if (opts.flatness_k_max > 0) {
    const FlatnessResult f = flatness_check(g, opts.flatness_k_max);
    if (!f.flat) throw std::invalid_argument("geometry is not flat");
  }
  const std::vector<Mask> declared = geo_operator_cliques(g, n);
  std::vector<Mask> edges;
  for (Mask k : declared) for_each_k_submask(k, n, [&](Mask e) { edges.push_back(e); });
  SStructure s = SStructure::from_masks(n, g.universe(), std::move(edges));
  if (maximal_clique_masks(s) != declared)
    throw InvariantViolation("closures of (n-1)-subsets are not the maximal cliques of the result");
  return s;
}

bool geometries_equal(const Geometry& a, const Geometry& b) {
  if (a.universe() != b.universe())
    throw std::invalid_argument("geometries live on different universes");
  return std::equal(a.rank_table().begin(), a.rank_table().end(), b.rank_table().begin(),
                    b.rank_table().end());
}

}  // namespace abinitio
