#include "abinitio/amalgam.hpp"

#include <algorithm>
#include <bit>

#include "abinitio/classes.hpp"
#include "abinitio/cliques.hpp"
#include "abinitio/geometry.hpp"
#include "abinitio/predim.hpp"

namespace abinitio {

namespace {

void require_member(const SStructure& s, ClassId c, const char* which) {
  if (const Membership m = class_member(s, c); !m)
    throw std::invalid_argument(std::string(which) + " is not in " + std::string(to_string(c)) + ": " +
                                m.reason + " (witness " + to_string(m.witness) + ")");
}

Mask to_mask(const VertexSet& universe, const VertexSet& vs) {
  Mask m = 0;
  for (Vertex v : vs) {
    const auto it = std::lower_bound(universe.begin(), universe.end(), v);
    m |= Mask{1} << (it - universe.begin());
  }
  return m;
}

}  // namespace

AmalgamResult amalgamate(const AmalgamProblem& p) {
  const SStructure& a1 = p.first;
  const int n = a1.arity();
  if (p.second.arity() != n) throw std::invalid_argument("amalgam sides have different arities");
  const VertexSet base = make_vertex_set(p.base);
  for (Vertex v : base)
    if (!a1.contains(v) || !p.second.contains(v))
      throw std::invalid_argument("base vertex " + std::to_string(v) + " is missing from a side");
  if (induced(a1, base) != induced(p.second, base))
    throw std::invalid_argument("the sides induce different structures on the base " + to_string(base));

  const ClassId pre = p.kind == AmalgamKind::Standard ? ClassId::CLQ0 : ClassId::GEO;
  require_member(a1, pre, "first side");
  require_member(p.second, pre, "second side");

  AmalgamResult out;
  Vertex fresh = std::max(a1.max_vertex(), p.second.max_vertex()) + 1;
  for (Vertex v : p.second.universe())
    if (!std::binary_search(base.begin(), base.end(), v) && a1.contains(v))
      out.second_renamed[v] = fresh++;
  const SStructure a2 = out.second_renamed.empty() ? p.second : relabel(p.second, out.second_renamed);

  VertexSet universe = a1.universe();
  universe.insert(universe.end(), a2.universe().begin(), a2.universe().end());
  universe = make_vertex_set(std::move(universe));
  if (universe.size() > kMaxVertices) throw ResourceLimit("amalgam exceeds the vertex limit");

  std::vector<Mask> k1;
  std::vector<Mask> k2;
  for (Mask k : maximal_clique_masks(a1)) k1.push_back(to_mask(universe, a1.vertices_of(k)));
  for (Mask k : maximal_clique_masks(a2)) k2.push_back(to_mask(universe, a2.vertices_of(k)));
  const Mask b = to_mask(universe, base);

  std::vector<Mask> declared;
  if (p.kind == AmalgamKind::Standard) {
    for (Mask k : k1)
      if (popcount(k & b) < n) declared.push_back(k);
    for (Mask k : k2)
      if (popcount(k & b) < n) declared.push_back(k);
    for (Mask x : k1)
      for (Mask y : k2)
        if (popcount(x & y) >= n) declared.push_back(x | y);
  } else {
    for (Mask x : k1)
      for (Mask y : k2)
        if (popcount(x & y) >= n - 1) declared.push_back(x | y);
    for (Mask x : k1)
      if (std::all_of(k2.begin(), k2.end(), [&](Mask y) { return popcount(x & y) < n - 1; }))
        declared.push_back(x);
    for (Mask y : k2)
      if (std::all_of(k1.begin(), k1.end(), [&](Mask x) { return popcount(x & y) < n - 1; }))
        declared.push_back(y);
  }
  std::sort(declared.begin(), declared.end());
  declared.erase(std::unique(declared.begin(), declared.end()), declared.end());

  std::vector<Mask> edges;
  for (Mask k : declared) for_each_k_submask(k, n, [&](Mask e) { edges.push_back(e); });
  out.amalgam = SStructure::from_masks(n, universe, std::move(edges));
  for (Mask k : declared) out.declared_cliques.push_back(out.amalgam.vertices_of(k));
  std::sort(out.declared_cliques.begin(), out.declared_cliques.end());

  const SStructure& d = out.amalgam;
  if (maximal_clique_masks(d) != declared)
    throw InvariantViolation("declared clique family is not the set of maximal cliques of the amalgam");

  const SStructure b_struct = induced(a1, base);
  if (p.kind == AmalgamKind::Standard) {
    if (predim(d) - predim(a1) != predim(a2) - predim(b_struct))
      throw InvariantViolation("standard amalgam breaks predim(D/A1) = predim(A2/B)");
    // Singletons stay strong only when the base is strong on both sides.
    if (class_member(a1, ClassId::CLQ) && class_member(a2, ClassId::CLQ) && is_strong(a1, base) &&
        is_strong(a2, base) && !class_member(d, ClassId::CLQ))
      throw InvariantViolation("standard amalgam of CLQ structures over a strong base left CLQ");
  } else {
    if (const Membership m = class_member(d, ClassId::CLQ); !m)
      throw InvariantViolation("geometric amalgam left CLQ: " + m.reason);
    if (is_strong(a1, base) || is_strong(a2, base)) {
      if (const Membership m = class_member(d, ClassId::GEO); !m)
        throw InvariantViolation("geometric amalgam over a strong base left GEO: " + m.reason);
    }
  }
  return out;
}

SStructure standard_amalgam(const AmalgamProblem& p) {
  AmalgamProblem q = p;
  q.kind = AmalgamKind::Standard;
  return amalgamate(q).amalgam;
}

SStructure geometric_amalgam(const AmalgamProblem& p) {
  AmalgamProblem q = p;
  q.kind = AmalgamKind::Geometric;
  return amalgamate(q).amalgam;
}

SStructure surgery(const SStructure& whole, const SStructure& replaced, const SStructure& replacement) {
  const int n = whole.arity();
  if (replaced.arity() != n || replacement.arity() != n)
    throw std::invalid_argument("surgery operands have different arities");
  require_member(whole, ClassId::SYM, "whole structure");
  require_member(replaced, ClassId::SYM, "replaced substructure");
  require_member(replacement, ClassId::CLQ, "replacement");
  for (Vertex v : replaced.universe())
    if (!whole.contains(v))
      throw std::invalid_argument("replaced substructure leaves the whole structure at " + std::to_string(v));
  if (induced(whole, replaced.universe()) != replaced)
    throw std::invalid_argument("replaced structure is not the induced substructure on its universe");
  if (const StrengthResult r = is_strong_with_witness(whole, replaced.universe()); !r)
    throw std::invalid_argument("replaced substructure is not strong; witness " +
                                to_string(whole.vertices_of(r.witness)));
  if (replacement.universe() != replaced.universe())
    throw std::invalid_argument("replacement lives on a different universe");
  const Geometry g_whole = geometry_of(whole);
  if (!geometries_equal(geometry_of(replacement), geometry_of(replaced)))
    throw std::invalid_argument("replacement has a different geometry");

  const Mask region = whole.mask_of(replaced.universe());
  std::vector<Mask> edges;
  for (Mask e : whole.edge_masks())
    if (!is_subset(e, region)) edges.push_back(e);
  for (const VertexSet& e : replacement.edges()) edges.push_back(whole.mask_of(e));
  SStructure out = SStructure::from_masks(n, whole.universe(), std::move(edges));

  if (!is_strong(out, replacement.universe()))
    throw InvariantViolation("replacement is not strong after surgery");
  if (!geometries_equal(geometry_of(out), g_whole))
    throw InvariantViolation("surgery changed the geometry");
  return out;
}

std::optional<SStructure> mixed_extension_search(const SStructure& base_structure,
                                                 const SStructure& target, std::uint64_t budget) {
  const int n = base_structure.arity();
  if (target.arity() != n) throw std::invalid_argument("operands have different arities");
  require_member(base_structure, ClassId::CLQ, "base structure");
  const Geometry g_base = geometry_of(base_structure);
  if (!small_sets_independent(g_base, n))
    throw std::invalid_argument("geometry of the base structure has a small dependent set");
  require_member(target, ClassId::GEO, "target");
  for (Vertex v : base_structure.universe())
    if (!target.contains(v))
      throw std::invalid_argument("base vertex " + std::to_string(v) + " is missing from the target");
  const SStructure base_hat = geo_operator(g_base, n);
  if (induced(target, base_structure.universe()) != base_hat)
    throw std::invalid_argument("target does not induce the geo structure of the base");
  if (const StrengthResult r = is_strong_with_witness(target, base_structure.universe()); !r)
    throw std::invalid_argument("geo structure of the base is not strong in the target; witness " +
                                to_string(target.vertices_of(r.witness)));

  const Mask region = target.mask_of(base_structure.universe());
  std::vector<Mask> fixed;
  for (const VertexSet& e : base_structure.edges()) fixed.push_back(target.mask_of(e));
  std::vector<VertexSet> free_sets;
  for_each_k_submask(target.full_mask(), n, [&](Mask e) {
    if (!is_subset(e, region)) free_sets.push_back(target.vertices_of(e));
  });
  std::sort(free_sets.begin(), free_sets.end());
  const std::size_t f = free_sets.size();
  if (f >= 63 || (std::uint64_t{1} << f) > budget)
    throw ResourceLimit("mixed extension search over 2^" + std::to_string(f) +
                        " candidates exceeds budget " + std::to_string(budget));
  std::vector<Mask> free_masks;
  for (const auto& e : free_sets) free_masks.push_back(target.mask_of(e));

  for (std::size_t k = 0; k <= f; ++k) {
    std::uint64_t pick = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << f;
    while (pick < limit) {
      std::vector<Mask> edges = fixed;
      for (std::uint64_t q = pick; q != 0; q &= q - 1)
        edges.push_back(free_masks[static_cast<std::size_t>(std::countr_zero(q))]);
      const SStructure b = SStructure::from_masks(n, target.universe(), std::move(edges));
      if (is_strong(b, base_structure.universe()) && class_member(b, ClassId::CLQ)) {
        const Geometry g = geometry_of(b);
        if (small_sets_independent(g, n) && geo_operator(g, n) == target) return b;
      }
      if (k == 0) break;
      const std::uint64_t c = pick & (~pick + 1);
      const std::uint64_t r = pick + c;
      pick = (((r ^ pick) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

}  // namespace abinitio
