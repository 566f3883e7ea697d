#include "abinitio/chain.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <tuple>

#include "abinitio/amalgam.hpp"
#include "abinitio/canonical.hpp"
#include "abinitio/geometry.hpp"
#include "abinitio/random.hpp"

namespace abinitio {

std::string structure_key(const SStructure& s) {
  std::ostringstream os;
  os << s.arity() << ':';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.universe()[i];
  os << ':';
  bool first = true;
  for (const auto& e : s.edges()) {
    os << (first ? "" : ",");
    first = false;
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "-" : "") << e[i];
  }
  return os.str();
}

SStructure hat(const SStructure& a) {
  if (const Membership m = class_member(a, ClassId::CLQ); !m)
    throw std::invalid_argument("hat needs a CLQ structure: " + m.reason);
  const Geometry g = geometry_of(a);
  if (!small_sets_independent(g, a.arity()))
    throw std::invalid_argument("hat needs every (n-1)-subset independent; purity is " +
                                std::to_string(purity(g)));
  SStructure h = geo_operator(g, a.arity());
  if (predim(h) != g.rank(g.full_mask()))
    throw InvariantViolation("predim(hat(A)) differs from the dimension of A");
  return h;
}

std::vector<SStructure> enumerate_strong_extensions(const SStructure& a, ClassId c, std::size_t d_cap) {
  if (const Membership m = class_member(a, c); !m)
    throw std::invalid_argument("base is not in " + std::string(to_string(c)) + ": " + m.reason);
  if (d_cap > kDefaultCanonicalCap)
    throw ResourceLimit("extension size cap " + std::to_string(d_cap) + " is above " +
                        std::to_string(kDefaultCanonicalCap));
  std::vector<SStructure> out;
  if (d_cap < a.size()) return out;
  const int n = a.arity();
  const VertexSet& base = a.universe();
  const Vertex first_new = base.empty() ? 1 : base.back() + 1;

  std::vector<SStructure> level{a};
  std::vector<SStructure> members{a};
  for (std::size_t s = a.size() + 1; s <= d_cap; ++s) {
    const Vertex v = first_new + static_cast<Vertex>(s - 1 - a.size());
    std::map<std::string, SStructure> next;
    for (const SStructure& rep : level) {
      VertexSet universe = rep.universe();
      universe.push_back(v);
      const SStructure grown = SStructure::from_masks(
          n, universe, std::vector<Mask>(rep.edge_masks().begin(), rep.edge_masks().end()));
      const Mask old_part = low_mask(rep.size());
      const Mask v_bit = Mask{1} << rep.size();
      std::vector<Mask> options;
      for_each_k_submask(old_part, n - 1, [&](Mask t) { options.push_back(t | v_bit); });
      if (options.size() > 24)
        throw ResourceLimit("too many edge choices for a new vertex: " + std::to_string(options.size()));
      const std::uint64_t total = std::uint64_t{1} << options.size();
      for (std::uint64_t pick = 0; pick < total; ++pick) {
        std::vector<Mask> added;
        for (std::uint64_t q = pick; q != 0; q &= q - 1)
          added.push_back(options[static_cast<std::size_t>(std::countr_zero(q))]);
        SStructure d = with_edges(grown, added);
        if (!class_member(d, c)) continue;
        SStructure canon = canonical_form_over(d, base);
        std::string key = structure_key(canon);
        next.emplace(std::move(key), std::move(canon));
      }
    }
    level.clear();
    for (auto& [key, d] : next) {
      level.push_back(d);
      members.push_back(std::move(d));
    }
  }
  for (SStructure& d : members)
    if (is_strong(d, base)) out.push_back(std::move(d));
  std::stable_sort(out.begin(), out.end(), [](const SStructure& x, const SStructure& y) {
    return x.size() != y.size() ? x.size() < y.size() : structure_key(x) < structure_key(y);
  });
  return out;
}

std::vector<SStructure> ExtensionCatalog::proper_extensions(const SStructure& base) {
  const std::vector<int> order = canonical_order(base);
  std::map<Vertex, Vertex> to_canon;
  std::map<Vertex, Vertex> from_canon;
  for (std::size_t label = 0; label < order.size(); ++label) {
    const Vertex actual = base.vertex_at(order[label]);
    to_canon[actual] = static_cast<Vertex>(label + 1);
    from_canon[static_cast<Vertex>(label + 1)] = actual;
  }
  const SStructure canon = relabel(base, to_canon);
  const std::string key = structure_key(canon);
  auto it = by_type_.find(key);
  if (it == by_type_.end()) {
    std::vector<SStructure> proper;
    for (SStructure& d : enumerate_strong_extensions(canon, class_, d_cap_))
      if (d.size() > canon.size()) proper.push_back(std::move(d));
    it = by_type_.emplace(key, std::move(proper)).first;
  }
  const Vertex top = base.empty() ? 0 : base.max_vertex();
  const Vertex k = static_cast<Vertex>(base.size());
  std::vector<SStructure> out;
  for (const SStructure& d : it->second) {
    std::map<Vertex, Vertex> rename = from_canon;
    for (Vertex v : d.universe())
      if (v > k) rename[v] = top + (v - k);
    out.push_back(canonical_form_over(relabel(d, rename), base.universe()));
  }
  return out;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const SStructure& d, const VertexSet& base, const SStructure& m, const PredimTable& mt)
      : d_(d), m_(m), mt_(mt), n_(d.arity()) {
    base_mask_d_ = d.mask_of(base);
    base_mask_m_ = m.mask_of(base);
    image_.assign(d.size(), -1);
    for_each_bit(base_mask_d_, [&](int i) {
      image_[static_cast<std::size_t>(i)] = m.index_of(d.vertex_at(i));
    });
    for_each_bit(d.full_mask() & ~base_mask_d_, [&](int i) { todo_.push_back(i); });
    mapped_d_ = base_mask_d_;
    used_m_ = base_mask_m_;
  }

  bool run() { return place(0); }

  std::map<Vertex, Vertex> result() const {
    std::map<Vertex, Vertex> out;
    for (std::size_t i = 0; i < d_.size(); ++i)
      out[d_.vertex_at(static_cast<int>(i))] = m_.vertex_at(image_[i]);
    return out;
  }

 private:
  bool place(std::size_t j) {
    if (j == todo_.size()) return strength(mt_, used_m_).strong;
    const int v = todo_[j];
    for (int w = 0; w < static_cast<int>(m_.size()); ++w) {
      if (((used_m_ >> w) & 1U) != 0) continue;
      if (!consistent(v, w)) continue;
      image_[static_cast<std::size_t>(v)] = w;
      mapped_d_ |= Mask{1} << v;
      used_m_ |= Mask{1} << w;
      if (place(j + 1)) return true;
      mapped_d_ &= ~(Mask{1} << v);
      used_m_ &= ~(Mask{1} << w);
      image_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  bool consistent(int v, int w) const {
    bool ok = true;
    for_each_k_submask(mapped_d_, n_ - 1, [&](Mask s) {
      if (!ok) return;
      Mask img = Mask{1} << w;
      for_each_bit(s, [&](int i) { img |= Mask{1} << image_[static_cast<std::size_t>(i)]; });
      if (d_.has_edge(s | (Mask{1} << v)) != m_.has_edge(img)) ok = false;
    });
    return ok;
  }

  const SStructure& d_;
  const SStructure& m_;
  const PredimTable& mt_;
  int n_;
  Mask base_mask_d_ = 0;
  Mask base_mask_m_ = 0;
  Mask mapped_d_ = 0;
  Mask used_m_ = 0;
  std::vector<int> image_;
  std::vector<int> todo_;
};

struct Placement {
  SStructure extension;  // renamed into the ids of the current stage
  VertexSet glue;
  std::size_t added = 0;
};

// Glues the extension along the largest strong part E (base <= E <= D) that
// already has a strong copy over the base in m; E = base always qualifies.
std::optional<Placement> place_requirement(const RequirementRecord& rec, const SStructure& m,
                                           const PredimTable& mt, std::size_t cap) {
  const SStructure& d = rec.extension;
  const Mask base = d.mask_of(rec.base);
  const PredimTable dt(d);
  std::vector<Mask> parts;
  for_each_submask(d.full_mask() & ~base, [&](Mask extra) {
    const Mask e = extra | base;
    if (e != d.full_mask() && strength(dt, e).strong) parts.push_back(e);
  });
  std::sort(parts.begin(), parts.end(), [](Mask x, Mask y) {
    return popcount(x) != popcount(y) ? popcount(x) > popcount(y) : x < y;
  });
  for (Mask e : parts) {
    if (m.size() + d.size() - static_cast<std::size_t>(popcount(e)) > cap) return std::nullopt;
    auto image = find_strong_embedding(induced(d, e), rec.base, m, mt);
    if (!image) continue;
    std::map<Vertex, Vertex> rename = *image;
    Vertex next = m.max_vertex() + 1;
    for (Vertex v : d.universe())
      if (rename.count(v) == 0) rename[v] = next++;
    Placement p{relabel(d, rename), {}, d.size() - static_cast<std::size_t>(popcount(e))};
    for (const auto& [from, to] : *image) p.glue.push_back(to);
    std::sort(p.glue.begin(), p.glue.end());
    return p;
  }
  return std::nullopt;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::optional<std::map<Vertex, Vertex>> find_strong_embedding(const SStructure& d, const VertexSet& base,
                                                              const SStructure& m, const PredimTable& mt) {
  if (d.size() > m.size()) return std::nullopt;
  if (induced(d, base) != induced(m, base)) return std::nullopt;
  EmbeddingSearch search(d, base, m, mt);
  if (!search.run()) return std::nullopt;
  return search.result();
}

std::vector<Requirement> list_requirements(const SStructure& m, std::size_t a_cap, ExtensionCatalog& catalog) {
  const PredimTable mt(m);
  std::vector<Requirement> out;
  const int top = static_cast<int>(std::min(a_cap, m.size()));
  for (int k = 0; k <= top; ++k) {
    for_each_k_submask(m.full_mask(), k, [&](Mask a) {
      if (!strength(mt, a).strong) return;
      const VertexSet base = m.vertices_of(a);
      for (SStructure& ext : catalog.proper_extensions(induced(m, a))) {
        Requirement r;
        r.base = base;
        r.key = to_string(base) + "|" + structure_key(ext);
        r.extension = std::move(ext);
        out.push_back(std::move(r));
      }
    });
  }
  std::sort(out.begin(), out.end(), [](const Requirement& x, const Requirement& y) { return x.key < y.key; });
  return out;
}

ChainApproximation build_generic(ClassId c, int arity, std::size_t steps, const ChainCaps& caps,
                                 std::uint64_t seed) {
  if (c == ClassId::CLQ0)
    throw std::invalid_argument("generic chains need a class with strong singletons");
  if (caps.max_stage_size > kMaxExhaustiveVertices)
    throw ResourceLimit("stage cap " + std::to_string(caps.max_stage_size) + " exceeds " +
                        std::to_string(kMaxExhaustiveVertices));
  ChainApproximation chain;
  chain.class_id = c;
  chain.arity = arity;
  chain.seed = seed;
  chain.steps_requested = steps;
  chain.caps = caps;
  chain.stages.push_back(SStructure(arity));

  ExtensionCatalog catalog(c, caps.d_cap);
  std::vector<RequirementRecord> records;
  std::vector<std::uint64_t> ranks;
  std::unordered_map<std::string, std::size_t> index;
  const AmalgamKind kind = c == ClassId::GEO ? AmalgamKind::Geometric : AmalgamKind::Standard;

  auto register_stage = [&](std::size_t stage) {
    const SStructure& m = chain.stages[stage];
    for (Requirement& r : list_requirements(m, caps.a_cap, catalog)) {
      if (index.count(r.key) != 0) continue;
      index.emplace(r.key, records.size());
      RequirementRecord rec;
      rec.first_seen = stage;
      rec.base = std::move(r.base);
      rec.extension = std::move(r.extension);
      rec.key = std::move(r.key);
      ranks.push_back(derive_seed(seed, fnv1a(rec.key)));
      records.push_back(std::move(rec));
    }
    const PredimTable mt(m);
    for (RequirementRecord& rec : records)
      if (!rec.satisfied_at && find_strong_embedding(rec.extension, rec.base, m, mt))
        rec.satisfied_at = stage;
  };

  for (std::size_t step = 0;; ++step) {
    const std::size_t stage = chain.stages.size() - 1;
    register_stage(stage);
    if (step == steps) break;
    const SStructure& m = chain.stages.back();

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < records.size(); ++i)
      if (!records[i].satisfied_at) pending.push_back(i);
    std::sort(pending.begin(), pending.end(), [&](std::size_t x, std::size_t y) {
      return std::tie(records[x].first_seen, ranks[x], records[x].key) <
             std::tie(records[y].first_seen, ranks[y], records[y].key);
    });
    // Oldest cohort first. Inside it: fewest added vertices, then most cohort
    // requirements satisfied by the resulting stage, then the seeded rank.
    std::optional<std::size_t> chosen;
    std::optional<Placement> placement;
    std::optional<SStructure> best_stage;
    const PredimTable mt(m);
    for (std::size_t j = 0; j < pending.size() && !chosen;) {
      const std::size_t cohort = records[pending[j]].first_seen;
      const std::size_t begin = j;
      while (j < pending.size() && records[pending[j]].first_seen == cohort) ++j;
      std::size_t best_gain = 0;
      for (std::size_t q = begin; q < j; ++q) {
        auto p = place_requirement(records[pending[q]], m, mt, caps.max_stage_size);
        if (!p || (placement && p->added > placement->added)) continue;
        SStructure next = amalgamate(AmalgamProblem{m, p->extension, p->glue, kind}).amalgam;
        const PredimTable nt(next);
        std::size_t gain = 0;
        for (std::size_t r = begin; r < j; ++r)
          if (find_strong_embedding(records[pending[r]].extension, records[pending[r]].base, next, nt)) ++gain;
        if (!placement || p->added < placement->added || gain > best_gain) {
          best_gain = gain;
          placement = std::move(p);
          best_stage = std::move(next);
          chosen = pending[q];
        }
      }
    }
    if (!chosen) break;
    RequirementRecord& rec = records[*chosen];
    SStructure grown = std::move(*best_stage);

    if (const Membership mem = class_member(grown, c); !mem)
      throw InvariantViolation("amalgamation step left " + std::string(to_string(c)) + ": " + mem.reason);
    if (!is_strong(grown, m.universe()))
      throw InvariantViolation("stage is not strong in its successor");
    if (!find_strong_embedding(rec.extension, rec.base, grown, PredimTable(grown)))
      throw InvariantViolation("amalgamation step did not satisfy its requirement");
    rec.scheduled = true;
    chain.stages.push_back(std::move(grown));
  }

  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(records[x].first_seen, records[x].key) < std::tie(records[y].first_seen, records[y].key);
  });
  for (std::size_t i : order) chain.requirement_log.push_back(std::move(records[i]));
  return chain;
}

std::vector<RequirementStatus> requirement_status(const SStructure& m, ClassId c, std::size_t a_cap,
                                                  std::size_t d_cap) {
  if (const Membership mem = class_member(m, c); !mem)
    throw std::invalid_argument("structure is not in " + std::string(to_string(c)) + ": " + mem.reason);
  ExtensionCatalog catalog(c, d_cap);
  const PredimTable mt(m);
  std::vector<RequirementStatus> out;
  for (Requirement& r : list_requirements(m, a_cap, catalog)) {
    RequirementStatus s;
    s.satisfied = find_strong_embedding(r.extension, r.base, m, mt).has_value();
    s.requirement = std::move(r);
    out.push_back(std::move(s));
  }
  return out;
}

VerificationReport extension_property_report(const SStructure& m, ClassId c, std::size_t a_cap,
                                             std::size_t d_cap) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.property = "EXTENSION_PROPERTY";
  for (RequirementStatus& s : requirement_status(m, c, a_cap, d_cap)) {
    ++report.instances;
    if (s.satisfied) continue;
    report.add_violation(Counterexample{
        "no strong embedding over base " + to_string(s.requirement.base) + " of the extension",
        {s.requirement.extension}});
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace abinitio
