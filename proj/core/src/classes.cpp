#include "abinitio/classes.hpp"

#include "abinitio/predim.hpp"

namespace abinitio {

std::string_view to_string(ClassId c) noexcept {
  switch (c) {
    case ClassId::CLQ0: return "CLQ0";
    case ClassId::CLQ: return "CLQ";
    case ClassId::SYM: return "SYM";
    case ClassId::GEO: return "GEO";
    case ClassId::C: return "C";
  }
  return "?";
}

std::optional<ClassId> parse_class(std::string_view s) noexcept {
  for (ClassId c : kAllClasses)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace {

Membership fail(std::string reason, VertexSet witness) {
  return Membership{false, std::move(reason), std::move(witness)};
}

Membership check_clq0(const SStructure& a, const PredimTable& t) {
  const auto& ks = t.cliques();
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j)
      if (popcount(ks[i] & ks[j]) >= a.arity())
        return fail("maximal cliques " + to_string(a.vertices_of(ks[i])) + " and " +
                        to_string(a.vertices_of(ks[j])) + " share at least " +
                        std::to_string(a.arity()) + " vertices",
                    a.vertices_of(ks[i] & ks[j]));
  return {};
}

Membership check_singletons(const SStructure& a, const PredimTable& t) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const StrengthResult r = strength(t, Mask{1} << i);
    if (!r.strong)
      return fail("singleton {" + std::to_string(a.vertex_at(static_cast<int>(i))) +
                      "} is not strong: relative predimension " + std::to_string(r.min_relative) +
                      " on the witness",
                  a.vertices_of(r.witness));
  }
  return {};
}

Membership check_sym_cliques(const SStructure& a, const PredimTable& t) {
  for (Mask k : t.cliques())
    if (popcount(k) != a.arity())
      return fail("maximal clique " + to_string(a.vertices_of(k)) + " is larger than an edge",
                  a.vertices_of(k));
  return {};
}

Membership check_geometric(const SStructure& a, const PredimTable& t) {
  if (a.size() > kMaxExhaustiveVertices)
    throw ResourceLimit("geometric check over " + std::to_string(a.size()) + " vertices");
  const int n = a.arity();
  Membership out;
  for_each_submask(a.full_mask(), [&](Mask x) {
    if (!out.member || popcount(x) < n || t.predim(x) >= n) return;
    int containing = 0;
    for (Mask k : t.cliques())
      if (is_subset(x, k)) ++containing;
    if (containing != 1)
      out = fail("subset with predimension " + std::to_string(t.predim(x)) + " lies in " +
                     std::to_string(containing) + " maximal cliques",
                 a.vertices_of(x));
  });
  return out;
}

// Every subset of at most n-1 points is independent in the associated geometry.
Membership check_small_sets_independent(const SStructure& a, const PredimTable& t) {
  if (a.size() > kMaxExhaustiveVertices)
    throw ResourceLimit("dimension table over " + std::to_string(a.size()) + " vertices");
  const std::vector<int> d = dimension_table(t);
  const int limit = std::min<int>(a.arity() - 1, static_cast<int>(a.size()));
  for (int k = 1; k <= limit; ++k) {
    Membership out;
    for_each_k_submask(a.full_mask(), k, [&](Mask x) {
      if (out.member && d[x] < k)
        out = fail("subset of size " + std::to_string(k) + " has dimension " +
                       std::to_string(d[x]),
                   a.vertices_of(x));
    });
    if (!out.member) return out;
  }
  return {};
}

}  // namespace

Membership class_member(const SStructure& a, ClassId c) {
  const PredimTable t(a);
  switch (c) {
    case ClassId::CLQ0:
      return check_clq0(a, t);
    case ClassId::CLQ: {
      if (auto m = check_clq0(a, t); !m) return m;
      return check_singletons(a, t);
    }
    case ClassId::SYM: {
      if (auto m = check_clq0(a, t); !m) return m;
      if (auto m = check_sym_cliques(a, t); !m) return m;
      return check_singletons(a, t);
    }
    case ClassId::GEO: {
      if (auto m = check_geometric(a, t); !m) return m;
      if (auto m = check_clq0(a, t); !m) return m;
      return check_singletons(a, t);
    }
    case ClassId::C: {
      if (auto m = check_clq0(a, t); !m) return m;
      if (auto m = check_sym_cliques(a, t); !m) return m;
      if (auto m = check_singletons(a, t); !m) return m;
      return check_small_sets_independent(a, t);
    }
  }
  return fail("unknown class", {});
}

}  // namespace abinitio
