#include "abinitio/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "abinitio/amalgam.hpp"
#include "abinitio/chain.hpp"
#include "abinitio/classes.hpp"
#include "abinitio/cliques.hpp"
#include "abinitio/geometry.hpp"
#include "abinitio/predim.hpp"
#include "abinitio/random.hpp"

namespace abinitio {

void VerificationReport::add_violation(Counterexample c) {
  ++violation_count;
  if (violations.size() < kMaxStoredCounterexamples) violations.push_back(std::move(c));
}

namespace {

constexpr std::array<std::string_view, 15> kPropertyNames{
    "SUBMODULARITY",        "STRONG_TRANSITIVE",        "AMALGAM_PREDIM", "GEO_AMALGAM_CLOSED",
    "LARGE_DEPENDENT_CLIQUE", "DELTA_GEQ_D",            "PURE_CLQ_IS_GEO", "CHANGING_LEMMA",
    "PREDIM_CLOSED_EQ_DIM", "HAT_STRONG",               "THEOREM_GEOMETRY_EQUALITY", "REDUCT_REMARK",
    "GENERIC_GEO_CLOSED_SETS", "GEO_IDEMPOTENT",        "FLATNESS",
};

using Check = std::function<std::optional<Counterexample>()>;

// One instance: a returned counterexample or an InvariantViolation from the
// library is a violation; the inputs are attached in the latter case.
void run_instance(VerificationReport& r, const std::vector<SStructure>& inputs, const Check& body) {
  ++r.instances;
  try {
    if (auto c = body()) r.add_violation(std::move(*c));
  } catch (const InvariantViolation& e) {
    r.add_violation(Counterexample{std::string("invariant violated: ") + e.what(), inputs});
  }
}

void bump(VerificationReport& r, const std::string& key, std::int64_t by = 1) { r.notes[key] += by; }

std::string mask_text(const SStructure& a, Mask x) { return to_string(a.vertices_of(x)); }

std::string two_digits(std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu", k);
  return buf;
}

VertexSet first_vertices(std::size_t m) {
  VertexSet u;
  for (std::size_t i = 1; i <= m; ++i) u.push_back(static_cast<Vertex>(i));
  return u;
}

int pick_arity(const VerifyConfig& cfg, Rng& rng) {
  return cfg.random_arities[static_cast<std::size_t>(rng.below(cfg.random_arities.size()))];
}

double pick_density(Rng& rng) { return 0.1 + 0.6 * rng.unit(); }

SStructure random_member(ClassId c, int n, std::size_t max_size, Rng& rng) {
  const std::size_t size = static_cast<std::size_t>(rng.below(max_size + 1));
  const double density = pick_density(rng);
  return random_structure(c, n, size, density, rng.next(), std::max(max_size, kDefaultRandomCap));
}

// Visits all edge sets on 1..m; with `clique_free` only those without an
// (n+1)-clique, which is necessary for SYM and C.
void enumerate_edge_sets(int n, std::size_t m, bool clique_free, const std::function<void(const SStructure&)>& f) {
  std::vector<Mask> subsets;
  for_each_k_submask(low_mask(m), n, [&](Mask e) { subsets.push_back(e); });
  if (subsets.size() > 24)
    throw ResourceLimit("exhaustive sweep over 2^" + std::to_string(subsets.size()) + " edge sets");
  std::vector<std::uint32_t> big;  // edge-index sets of the (n+1)-subsets
  if (clique_free) {
    for_each_k_submask(low_mask(m), n + 1, [&](Mask q) {
      std::uint32_t bits = 0;
      for (std::size_t i = 0; i < subsets.size(); ++i)
        if (is_subset(subsets[i], q)) bits |= std::uint32_t{1} << i;
      big.push_back(bits);
    });
  }
  const VertexSet universe = first_vertices(m);
  const std::uint64_t total = std::uint64_t{1} << subsets.size();
  std::vector<Mask> edges;
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    const auto bits = static_cast<std::uint32_t>(pick);
    if (std::any_of(big.begin(), big.end(), [&](std::uint32_t q) { return (bits & q) == q; })) continue;
    edges.clear();
    for (std::uint32_t q = bits; q != 0; q &= q - 1) edges.push_back(subsets[static_cast<std::size_t>(std::countr_zero(q))]);
    f(SStructure::from_masks(n, universe, edges));
  }
}

void for_each_member(ClassId c, int n, std::size_t max_size, const std::function<void(const SStructure&)>& f) {
  const bool clique_free = c == ClassId::SYM || c == ClassId::C;
  for (std::size_t m = 0; m <= max_size; ++m) {
    if (c == ClassId::GEO) {
      for_each_geo_structure(n, m, f);
      continue;
    }
    enumerate_edge_sets(n, m, clique_free, [&](const SStructure& a) {
      if (class_member(a, c)) f(a);
    });
  }
}

VerificationReport start_report(PropertyId p, const VerifyConfig& cfg) {
  VerificationReport r;
  r.property = std::string(to_string(p));
  r.seed = cfg.seed;
  return r;
}

ChainCaps chain_caps(const VerifyConfig& cfg) {
  ChainCaps caps;
  caps.max_stage_size = cfg.stage_cap;
  caps.a_cap = cfg.a_cap;
  caps.d_cap = cfg.d_cap;
  return caps;
}

// ---- single-structure oracles ----

std::optional<std::string> submodularity_failure(const SStructure& a) {
  const PredimTable t(a);
  const std::vector<int> p = t.all_predims();
  const Mask full = a.full_mask();
  for (Mask x = 0; x <= full; ++x)
    for (Mask y = x + 1; y <= full; ++y)
      if (p[x | y] + p[x & y] > p[x] + p[y])
        return "predim(X u Y) + predim(X n Y) > predim(X) + predim(Y) for X = " + mask_text(a, x) +
               ", Y = " + mask_text(a, y);
  return std::nullopt;
}

std::optional<std::string> transitivity_failure(const SStructure& a) {
  const PredimTable t(a);
  const std::vector<int> p = t.all_predims();
  const Mask full = a.full_mask();
  std::vector<char> strong_in_a(std::size_t{full} + 1);
  for (Mask x = 0; x <= full; ++x) strong_in_a[x] = strength(t, x).strong ? 1 : 0;
  std::vector<int> low(std::size_t{full} + 1);
  for (Mask b = 0; b <= full; ++b) {
    if (!strong_in_a[b]) continue;
    // low[c] = min predim over c <= y <= b
    for (Mask s = b;; s = (s - 1) & b) {
      low[s] = p[s];
      if (s == 0) break;
    }
    for_each_bit(b, [&](int i) {
      const Mask bit = Mask{1} << i;
      for (Mask s = b;; s = (s - 1) & b) {
        if ((s & bit) == 0) low[s] = std::min(low[s], low[s | bit]);
        if (s == 0) break;
      }
    });
    for (Mask c = b;; c = (c - 1) & b) {
      if (low[c] >= p[c] && !strong_in_a[c])
        return mask_text(a, c) + " <= " + mask_text(a, b) + " <= A but " + mask_text(a, c) +
               " is not strong in A";
      if (c == 0) break;
    }
  }
  return std::nullopt;
}

std::optional<std::string> large_dependent_failure(const SStructure& a) {
  const PredimTable t(a);
  const int n = a.arity();
  std::optional<std::string> out;
  for_each_submask(a.full_mask(), [&](Mask x) {
    if (out) return;
    if (popcount(x) < n) {
      if (!strength(t, x).strong) out = "small subset " + mask_text(a, x) + " is not strong";
      return;
    }
    const int d = t.predim(x);
    if (d >= n) return;
    if (!is_clique(a, x))
      out = "subset " + mask_text(a, x) + " with predim " + std::to_string(d) + " is not a clique";
    else if (d != n - 1)
      out = "clique " + mask_text(a, x) + " has predim " + std::to_string(d);
  });
  return out;
}

std::optional<std::string> reduct_failure(const SStructure& a) {
  const SStructure reduct = dependent_n_structure(geometry_of(a), a.arity());
  if (reduct.edges() != a.edges()) return "dependent n-subsets differ from the edges";
  return std::nullopt;
}

std::optional<std::string> idempotence_failure(const SStructure& a) {
  const int n = a.arity();
  const Geometry g = geometry_of(a);
  const int expected = a.edge_count() > 0 ? n - 1 : static_cast<int>(a.size());
  if (!small_sets_independent(g, n) || purity(g) != expected)
    return "purity is " + std::to_string(purity(g)) + ", expected " + std::to_string(expected);
  if (geo_operator(g, n) != a) return "geo operator does not give back the structure";
  return std::nullopt;
}

std::optional<std::string> hat_predim_failure(const SStructure& a) {
  const Geometry g = geometry_of(a);
  const SStructure h = hat(a);
  const int rank = g.rank(g.full_mask());
  if (predim(h) != rank)
    return "predim(hat A) = " + std::to_string(predim(h)) + " but the universe has rank " + std::to_string(rank);
  return std::nullopt;
}

std::optional<std::string> pure_clq_failure(const SStructure& a) {
  const SStructure g = geo_operator(geometry_of(a), a.arity());
  if (const Membership m = class_member(g, ClassId::GEO); !m) return "geo operator output not in GEO: " + m.reason;
  return std::nullopt;
}

std::optional<std::string> flatness_failure(const SStructure& a, int k_max) {
  const FlatnessResult f = flatness_check(geometry_of(a), k_max);
  if (!f.flat) return "flatness sum " + std::to_string(f.sum) + " over a family of flats";
  return std::nullopt;
}

using StructureOracle = std::function<std::optional<std::string>(const SStructure&)>;

// Runs `oracle` on one structure; a failure is shrunk inside class c.
void check_structure(VerificationReport& r, const SStructure& a, ClassId c, const StructureOracle& oracle) {
  run_instance(r, {a}, [&]() -> std::optional<Counterexample> {
    auto why = oracle(a);
    if (!why) return std::nullopt;
    const SStructure small = shrink(a, [&](const SStructure& s) {
      try {
        return static_cast<bool>(class_member(s, c)) && oracle(s).has_value();
      } catch (const std::exception&) {
        return false;
      }
    });
    return Counterexample{*oracle(small), {small}};
  });
}

void sweep(VerificationReport& r, ClassId c, int n, std::size_t max_size, const StructureOracle& oracle) {
  for_each_member(c, n, max_size, [&](const SStructure& a) { check_structure(r, a, c, oracle); });
}

void random_sweep(VerificationReport& r, const VerifyConfig& cfg, std::uint64_t stream, std::size_t count,
                  ClassId c, std::size_t max_size, const StructureOracle& oracle) {
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(derive_seed(cfg.seed, stream), i));
    const int n = pick_arity(cfg, rng);
    check_structure(r, random_member(c, n, max_size, rng), c, oracle);
  }
}

// Draws a random CLQ member with every (n-1)-subset independent.
std::optional<SStructure> random_pure_clq(const VerifyConfig& cfg, Rng& rng, std::size_t max_size) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int n = pick_arity(cfg, rng);
    SStructure a = random_member(ClassId::CLQ, n, max_size, rng);
    if (small_sets_independent(geometry_of(a), n)) return a;
  }
  return std::nullopt;
}

// ---- amalgam problems ----

struct Sides {
  SStructure base, first, second;
};

// Base on 1..b, first side adds b+1..s1, second side adds ids above s1.
Sides random_sides(ClassId c, int n, std::size_t side_max, Rng& rng) {
  const std::size_t s1 = static_cast<std::size_t>(rng.below(side_max + 1));
  const std::size_t b = static_cast<std::size_t>(rng.below(s1 + 1));
  const std::size_t s2 = b + static_cast<std::size_t>(rng.below(side_max - b + 1));
  Sides out;
  out.base = random_structure(c, n, b, pick_density(rng), rng.next(), std::max(side_max, kDefaultRandomCap));
  const std::vector<Mask> base_edges(out.base.edge_masks().begin(), out.base.edge_masks().end());
  VertexSet u1 = first_vertices(s1);
  VertexSet u2 = first_vertices(b);
  for (std::size_t i = 0; i < s2 - b; ++i) u2.push_back(static_cast<Vertex>(s1 + 1 + i));
  const Mask frozen = low_mask(b);
  out.first = random_extension(SStructure::from_masks(n, u1, base_edges), frozen, c, pick_density(rng), rng);
  out.second = random_extension(SStructure::from_masks(n, u2, base_edges), frozen, c, pick_density(rng), rng);
  return out;
}

VerificationReport verify_amalgam_predim(const VerifyConfig& cfg) {
  VerificationReport r = start_report(PropertyId::AMALGAM_PREDIM, cfg);
  for (std::size_t i = 0; i < cfg.amalgam_instances; ++i) {
    Rng rng(derive_seed(derive_seed(cfg.seed, 3), i));
    const int n = pick_arity(cfg, rng);
    const Sides s = random_sides(ClassId::CLQ0, n, cfg.amalgam_side_max, rng);
    run_instance(r, {s.first, s.second}, [&]() -> std::optional<Counterexample> {
      const SStructure d = standard_amalgam({s.first, s.second, s.base.universe(), AmalgamKind::Standard});
      const int lhs = predim(d) - predim(s.first);
      const int rhs = predim(s.second) - predim(s.base);
      if (lhs != rhs)
        return Counterexample{"predim(D/A1) = " + std::to_string(lhs) + " but predim(A2/B) = " + std::to_string(rhs),
                              {s.first, s.second, d}};
      if (class_member(s.first, ClassId::CLQ) && class_member(s.second, ClassId::CLQ) &&
          is_strong(s.first, s.base.universe()) && is_strong(s.second, s.base.universe())) {
        bump(r, "clq_sides_strong_base");
        if (!class_member(d, ClassId::CLQ))
          return Counterexample{"amalgam of CLQ sides is not in CLQ", {s.first, s.second, d}};
      }
      return std::nullopt;
    });
  }
  return r;
}

VerificationReport verify_geo_amalgam(const VerifyConfig& cfg) {
  VerificationReport r = start_report(PropertyId::GEO_AMALGAM_CLOSED, cfg);
  std::size_t accepted = 0;
  for (std::size_t i = 0; accepted < cfg.amalgam_instances && i < 50 * cfg.amalgam_instances + 50; ++i) {
    Rng rng(derive_seed(derive_seed(cfg.seed, 4), i));
    const int n = pick_arity(cfg, rng);
    const Sides s = random_sides(ClassId::GEO, n, cfg.amalgam_side_max, rng);
    if (!is_strong(s.first, s.base.universe())) {
      bump(r, "rejected_base_not_strong");
      continue;
    }
    ++accepted;
    run_instance(r, {s.first, s.second}, [&]() -> std::optional<Counterexample> {
      const SStructure d = geometric_amalgam({s.first, s.second, s.base.universe(), AmalgamKind::Geometric});
      if (const Membership m = class_member(d, ClassId::GEO); !m)
        return Counterexample{"geometric amalgam not in GEO: " + m.reason, {s.first, s.second, d}};
      return std::nullopt;
    });
  }
  if (accepted < cfg.amalgam_instances) bump(r, "shortfall", static_cast<std::int64_t>(cfg.amalgam_instances - accepted));
  return r;
}

// ---- geometry oracles ----

VerificationReport verify_delta_geq_d(const VerifyConfig& cfg) {
  VerificationReport r = start_report(PropertyId::DELTA_GEQ_D, cfg);
  for (std::size_t i = 0; i < cfg.geometry_instances; ++i) {
    Rng rng(derive_seed(derive_seed(cfg.seed, 6), i));
    const auto a = random_pure_clq(cfg, rng, cfg.random_max_size);
    if (!a) {
      bump(r, "no_pure_member");
      continue;
    }
    const int n = a->arity();
    Mask x = 0;
    for (std::size_t v = 0; v < a->size(); ++v)
      if (rng.chance(0.6)) x |= Mask{1} << v;
    run_instance(r, {*a}, [&]() -> std::optional<Counterexample> {
      const Geometry g = geometry_of(*a);
      const SStructure geo = geo_operator(g.restrict_to(x), n);
      const int lhs = predim(geo);
      const int rhs = g.rank(x);
      if (lhs == rhs) bump(r, "equality");
      if (lhs < rhs)
        return Counterexample{"predim of the geo structure on " + mask_text(*a, x) + " is " + std::to_string(lhs) +
                                  " below its rank " + std::to_string(rhs),
                              {*a, geo}};
      return std::nullopt;
    });
  }
  return r;
}

VerificationReport verify_pure_clq(const VerifyConfig& cfg) {
  VerificationReport r = start_report(PropertyId::PURE_CLQ_IS_GEO, cfg);
  for (std::size_t i = 0; i < cfg.geometry_instances; ++i) {
    Rng rng(derive_seed(derive_seed(cfg.seed, 7), i));
    const auto a = random_pure_clq(cfg, rng, cfg.random_max_size);
    if (!a) {
      bump(r, "no_pure_member");
      continue;
    }
    check_structure(r, *a, ClassId::CLQ, [](const SStructure& s) -> std::optional<std::string> {
      if (!small_sets_independent(geometry_of(s), s.arity())) return std::nullopt;
      return pure_clq_failure(s);
    });
  }
  return r;
}

// Some B in CLQ on the universe of `a` with the geometry of `a`, other than `a`.
std::optional<SStructure> same_geometry_partner(const SStructure& a, Rng& rng, VerificationReport& r) {
  const Geometry g = geometry_of(a);
  if (small_sets_independent(g, a.arity())) {
    const SStructure h = hat(a);
    if (geometries_equal(geometry_of(h), g)) {
      if (h != a) return h;
    } else {
      bump(r, "hat_geometry_mismatch");
    }
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    const SStructure empty = SStructure::from_masks(a.arity(), a.universe(), {});
    SStructure b = random_extension(empty, 0, ClassId::CLQ, pick_density(rng), rng);
    if (b != a && geometries_equal(geometry_of(b), g)) return b;
  }
  return std::nullopt;
}

VerificationReport verify_changing_lemma(const VerifyConfig& cfg) {
  VerificationReport r = start_report(PropertyId::CHANGING_LEMMA, cfg);
  std::size_t accepted = 0;
  for (std::size_t i = 0; accepted < cfg.surgery_instances && i < 100 * cfg.surgery_instances + 100; ++i) {
    Rng rng(derive_seed(derive_seed(cfg.seed, 8), i));
    const int n = pick_arity(cfg, rng);
    const SStructure d = random_member(ClassId::SYM, n, cfg.random_max_size, rng);
    Mask x = 0;
    for (std::size_t v = 0; v < d.size(); ++v)
      if (rng.chance(0.5)) x |= Mask{1} << v;
    const SStructure a = induced(d, self_sufficient_closure(PredimTable(d), x));
    const auto b = same_geometry_partner(a, rng, r);
    if (!b) {
      bump(r, "rejected_no_partner");
      continue;
    }
    ++accepted;
    run_instance(r, {d, a, *b}, [&]() -> std::optional<Counterexample> {
      const SStructure d2 = surgery(d, a, *b);
      if (induced(d2, a.universe()) != *b)
        return Counterexample{"surgery did not install the replacement", {d, a, *b, d2}};
      if (!is_strong(d2, a.universe()))
        return Counterexample{"replacement is not strong after surgery", {d, a, *b, d2}};
      if (!geometries_equal(geometry_of(d2), geometry_of(d)))
        return Counterexample{"surgery changed the geometry", {d, a, *b, d2}};
      return std::nullopt;
    });
  }
  if (accepted < cfg.surgery_instances) bump(r, "shortfall", static_cast<std::int64_t>(cfg.surgery_instances - accepted));
  return r;
}

// ---- chain oracles ----

VerificationReport verify_hat_strong(const VerifyConfig& cfg) {
  VerificationReport r = start_report(PropertyId::HAT_STRONG, cfg);
  const ChainApproximation chain = build_generic(ClassId::C, cfg.arity, cfg.chain_steps, chain_caps(cfg), cfg.seed);
  for (const SStructure& m : chain.stages) {
    const SStructure hm = hat(m);
    const PredimTable t(m);
    for_each_submask(m.full_mask(), [&](Mask x) {
      if (!strength(t, x).strong) return;
      const SStructure a = induced(m, x);
      run_instance(r, {m, a}, [&]() -> std::optional<Counterexample> {
        const SStructure ha = hat(a);
        if (!is_strong(hm, a.universe()))
          return Counterexample{"hat(A) is not strong in hat(M) for A = " + to_string(a.universe()), {m, a}};
        if (predim(ha) != predim(a))
          return Counterexample{"predim(hat A) differs from predim(A) for A = " + to_string(a.universe()), {m, a}};
        return std::nullopt;
      });
    });
  }
  r.notes["stages"] = static_cast<std::int64_t>(chain.stages.size());
  return r;
}

VerificationReport verify_theorem(const VerifyConfig& cfg) {
  VerificationReport r = start_report(PropertyId::THEOREM_GEOMETRY_EQUALITY, cfg);
  const ChainApproximation chain = build_generic(ClassId::C, cfg.arity, cfg.chain_steps, chain_caps(cfg), cfg.seed);
  for (std::size_t k = 1; k < chain.stages.size(); ++k) {
    const SStructure& prev = chain.stages[k - 1];
    const SStructure& m = chain.stages[k];
    const Geometry g = geometry_of(m);
    const Geometry h = geometry_of(hat(m));
    const PredimTable tp(prev);
    const PredimTable tm(m);
    const Mask old_part = m.mask_of(prev.universe());
    std::int64_t stabilized = 0;
    std::int64_t unstabilized_mismatch = 0;
    for_each_submask(m.full_mask(), [&](Mask x) {
      bool stable = false;
      if (is_subset(x, old_part)) {
        const Mask xp = prev.mask_of(m.vertices_of(x));
        stable = prev.vertices_of(self_sufficient_closure(tp, xp)) == m.vertices_of(self_sufficient_closure(tm, x));
      }
      const bool agree = g.rank(x) == h.rank(x);
      if (!stable) {
        if (!agree) ++unstabilized_mismatch;
        return;
      }
      ++stabilized;
      run_instance(r, {prev, m}, [&]() -> std::optional<Counterexample> {
        if (agree) return std::nullopt;
        return Counterexample{"ranks differ on stabilized subset " + mask_text(m, x) + " at stage " + std::to_string(k),
                              {prev, m}};
      });
    });
    const std::string prefix = "stage." + two_digits(k) + ".";
    r.notes[prefix + "stabilized"] = stabilized;
    r.notes[prefix + "unstabilized"] = static_cast<std::int64_t>(std::size_t{m.full_mask()} + 1) - stabilized;
    r.notes[prefix + "unstabilized_mismatch"] = unstabilized_mismatch;
  }
  r.notes["stages"] = static_cast<std::int64_t>(chain.stages.size());
  return r;
}

VerificationReport verify_generic_geo(const VerifyConfig& cfg) {
  VerificationReport r = start_report(PropertyId::GENERIC_GEO_CLOSED_SETS, cfg);
  const int n = cfg.arity;
  const ChainApproximation chain = build_generic(ClassId::GEO, n, cfg.chain_steps, chain_caps(cfg), cfg.seed);
  for (const SStructure& m : chain.stages) {
    run_instance(r, {m}, [&]() -> std::optional<Counterexample> {
      const Geometry g = geometry_of(m);
      std::vector<Mask> planes;
      for (Mask f : flats(g).flats)
        if (g.rank(f) == n - 1 && popcount(f) > n - 1) planes.push_back(f);
      std::sort(planes.begin(), planes.end());
      if (planes != maximal_clique_masks(m))
        return Counterexample{"flats of rank n-1 with more than n-1 points differ from the maximal cliques", {m}};
      return std::nullopt;
    });
  }
  r.notes["stages"] = static_cast<std::int64_t>(chain.stages.size());
  return r;
}

// ---- exhaustive-plus-random sweeps ----

VerificationReport verify_two_sweeps(PropertyId p, const VerifyConfig& cfg, std::uint64_t stream,
                                     const StructureOracle& oracle) {
  VerificationReport r = start_report(p, cfg);
  sweep(r, ClassId::CLQ0, cfg.arity, cfg.exhaustive_max_size, oracle);
  r.notes["exhaustive"] = static_cast<std::int64_t>(r.instances);
  random_sweep(r, cfg, stream, cfg.random_instances, ClassId::CLQ0, cfg.random_max_size, oracle);
  return r;
}

void validate(const VerifyConfig& cfg) {
  if (cfg.arity < 3) throw std::invalid_argument("verification needs arity at least 3");
  if (cfg.random_arities.empty()) throw std::invalid_argument("no random arities configured");
  for (int n : cfg.random_arities)
    if (n < 3) throw std::invalid_argument("random arities must be at least 3");
  if (cfg.random_max_size > kMaxExhaustiveVertices || cfg.amalgam_side_max > kMaxExhaustiveVertices / 2 ||
      cfg.flatness_max_size > kMaxExhaustiveVertices)
    throw ResourceLimit("random instance size exceeds the exhaustive limit");
  if (cfg.k_max < 0) throw std::invalid_argument("k_max must be non-negative");
}

}  // namespace

std::string_view to_string(PropertyId p) noexcept { return kPropertyNames[static_cast<std::size_t>(p)]; }

std::optional<PropertyId> parse_property(std::string_view s) noexcept {
  for (PropertyId p : kAllProperties)
    if (to_string(p) == s) return p;
  return std::nullopt;
}

void for_each_structure(int arity, std::size_t m, const std::function<void(const SStructure&)>& f) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  enumerate_edge_sets(arity, m, false, f);
}

void for_each_geo_structure(int arity, std::size_t m, const std::function<void(const SStructure&)>& f) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  if (m > 10) throw ResourceLimit("GEO enumeration over " + std::to_string(m) + " vertices");
  const int n = arity;
  std::vector<Mask> blocks;
  for (Mask b = 0; b <= low_mask(m); ++b)
    if (popcount(b) >= n) blocks.push_back(b);
  const VertexSet universe = first_vertices(m);
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    std::vector<Mask> edges;
    for (Mask b : chosen) for_each_k_submask(b, n, [&](Mask e) { edges.push_back(e); });
    const SStructure a = SStructure::from_masks(n, universe, edges);
    if (class_member(a, ClassId::GEO)) f(a);
    for (std::size_t i = from; i < blocks.size(); ++i) {
      const Mask b = blocks[i];
      if (std::any_of(chosen.begin(), chosen.end(), [&](Mask c) { return popcount(b & c) >= n - 1; })) continue;
      chosen.push_back(b);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
}

SStructure shrink(SStructure a, const std::function<bool(const SStructure&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < a.size() && !progress; ++i) {
      SStructure b = induced(a, a.full_mask() & ~(Mask{1} << i));
      if (fails(b)) {
        a = std::move(b);
        progress = true;
      }
    }
    for (std::size_t i = 0; i < a.edge_count() && !progress; ++i) {
      std::vector<Mask> edges(a.edge_masks().begin(), a.edge_masks().end());
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
      SStructure b = SStructure::from_masks(a.arity(), a.universe(), edges);
      if (fails(b)) {
        a = std::move(b);
        progress = true;
      }
    }
  }
  return a;
}

VerificationReport verify_suite(PropertyId p, const VerifyConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  switch (p) {
    case PropertyId::SUBMODULARITY:
      r = verify_two_sweeps(p, cfg, 1, submodularity_failure);
      break;
    case PropertyId::STRONG_TRANSITIVE:
      r = verify_two_sweeps(p, cfg, 2, transitivity_failure);
      break;
    case PropertyId::AMALGAM_PREDIM:
      r = verify_amalgam_predim(cfg);
      break;
    case PropertyId::GEO_AMALGAM_CLOSED:
      r = verify_geo_amalgam(cfg);
      break;
    case PropertyId::LARGE_DEPENDENT_CLIQUE:
      r = start_report(p, cfg);
      sweep(r, ClassId::GEO, cfg.arity, cfg.geo_dependent_size, large_dependent_failure);
      r.notes["exhaustive"] = static_cast<std::int64_t>(r.instances);
      random_sweep(r, cfg, 5, cfg.geometry_instances, ClassId::GEO, cfg.random_max_size, large_dependent_failure);
      break;
    case PropertyId::DELTA_GEQ_D:
      r = verify_delta_geq_d(cfg);
      break;
    case PropertyId::PURE_CLQ_IS_GEO:
      r = verify_pure_clq(cfg);
      break;
    case PropertyId::CHANGING_LEMMA:
      r = verify_changing_lemma(cfg);
      break;
    case PropertyId::PREDIM_CLOSED_EQ_DIM:
      r = start_report(p, cfg);
      sweep(r, ClassId::C, cfg.arity, cfg.c_exhaustive_size, hat_predim_failure);
      r.notes["exhaustive"] = static_cast<std::int64_t>(r.instances);
      random_sweep(r, cfg, 9, cfg.geometry_instances, ClassId::C, cfg.random_max_size, hat_predim_failure);
      break;
    case PropertyId::HAT_STRONG:
      r = verify_hat_strong(cfg);
      break;
    case PropertyId::THEOREM_GEOMETRY_EQUALITY:
      r = verify_theorem(cfg);
      break;
    case PropertyId::REDUCT_REMARK:
      r = start_report(p, cfg);
      sweep(r, ClassId::GEO, cfg.arity, cfg.geo_exhaustive_size, reduct_failure);
      break;
    case PropertyId::GENERIC_GEO_CLOSED_SETS:
      r = verify_generic_geo(cfg);
      break;
    case PropertyId::GEO_IDEMPOTENT:
      r = start_report(p, cfg);
      sweep(r, ClassId::GEO, cfg.arity, cfg.geo_exhaustive_size, idempotence_failure);
      break;
    case PropertyId::FLATNESS:
      r = start_report(p, cfg);
      random_sweep(r, cfg, 15, cfg.flatness_instances, ClassId::CLQ, cfg.flatness_max_size,
                   [&](const SStructure& a) { return flatness_failure(a, cfg.k_max); });
      break;
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace abinitio
