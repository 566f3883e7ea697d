#include "abinitio/canonical.hpp"

#include <algorithm>
#include <map>

namespace abinitio {

namespace {

// Iterated colour refinement. Fixed vertices get distinct leading colours.
std::vector<int> refine_colors(const SStructure& a, Mask fixed) {
  const int m = static_cast<int>(a.size());
  std::vector<int> color(static_cast<std::size_t>(m), 0);
  int next = 0;
  for_each_bit(fixed, [&](int i) { color[static_cast<std::size_t>(i)] = next++; });
  for (int i = 0; i < m; ++i)
    if (((fixed >> i) & 1U) == 0) color[static_cast<std::size_t>(i)] = next;

  std::vector<std::vector<Mask>> incident(static_cast<std::size_t>(m));
  for (Mask e : a.edge_masks()) for_each_bit(e, [&](int i) { incident[static_cast<std::size_t>(i)].push_back(e); });

  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<std::vector<int>>>;
    std::vector<Signature> sig(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = color[static_cast<std::size_t>(v)];
      for (Mask e : incident[static_cast<std::size_t>(v)]) {
        std::vector<int> others;
        for_each_bit(e & ~(Mask{1} << v), [&](int u) { others.push_back(color[static_cast<std::size_t>(u)]); });
        std::sort(others.begin(), others.end());
        s.second.push_back(std::move(others));
      }
      std::sort(s.second.begin(), s.second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < m; ++v)
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
          distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

// u and v are twins when the transposition (u v) is an automorphism.
bool are_twins(const SStructure& a, int u, int v) {
  const Mask bu = Mask{1} << u;
  const Mask bv = Mask{1} << v;
  for (Mask e : a.edge_masks()) {
    const bool hu = (e & bu) != 0;
    const bool hv = (e & bv) != 0;
    if (hu == hv) continue;
    if (!a.has_edge(e ^ bu ^ bv)) return false;
  }
  return true;
}

class OrderSearch {
 public:
  OrderSearch(const SStructure& a, Mask fixed)
      : a_(a), m_(static_cast<int>(a.size())), n_(a.arity()), color_(refine_colors(a, fixed)) {
    std::vector<int> sorted = color_;
    std::sort(sorted.begin(), sorted.end());
    position_color_ = sorted;

    twins_.assign(static_cast<std::size_t>(m_), 0);
    for (int u = 0; u < m_; ++u)
      for (int v = 0; v < m_; ++v)
        if (u != v && color_[static_cast<std::size_t>(u)] == color_[static_cast<std::size_t>(v)] &&
            are_twins(a, u, v))
          twins_[static_cast<std::size_t>(u)] |= Mask{1} << v;

    // For label k, the (n-1)-subsets of earlier labels in colex order; together
    // with k they are exactly the n-subsets whose largest label is k.
    segments_.resize(static_cast<std::size_t>(m_));
    offsets_.resize(static_cast<std::size_t>(m_) + 1, 0);
    for (int k = 0; k < m_; ++k) {
      for_each_k_submask(low_mask(static_cast<std::size_t>(k)), n_ - 1,
                         [&](Mask t) { segments_[static_cast<std::size_t>(k)].push_back(t); });
      offsets_[static_cast<std::size_t>(k) + 1] =
          offsets_[static_cast<std::size_t>(k)] + segments_[static_cast<std::size_t>(k)].size();
    }
    bits_.assign(offsets_.back(), 0);
    label_to_vertex_.assign(static_cast<std::size_t>(m_), -1);
  }

  std::vector<int> run() {
    descend(0, false);
    return best_order_;
  }

 private:
  void descend(int k, bool greater) {
    if (k == m_) {
      if (!have_best_ || greater) {
        best_bits_ = bits_;
        best_order_ = label_to_vertex_;
        have_best_ = true;
      }
      return;
    }
    const int want = position_color_[static_cast<std::size_t>(k)];
    Mask tried = 0;
    for (int v = 0; v < m_; ++v) {
      if (((assigned_ >> v) & 1U) != 0 || color_[static_cast<std::size_t>(v)] != want) continue;
      if ((twins_[static_cast<std::size_t>(v)] & tried) != 0) continue;
      tried |= Mask{1} << v;

      label_to_vertex_[static_cast<std::size_t>(k)] = v;
      assigned_ |= Mask{1} << v;
      const std::size_t lo = offsets_[static_cast<std::size_t>(k)];
      const auto& seg = segments_[static_cast<std::size_t>(k)];
      for (std::size_t j = 0; j < seg.size(); ++j) {
        Mask e = Mask{1} << v;
        for_each_bit(seg[j], [&](int l) { e |= Mask{1} << label_to_vertex_[static_cast<std::size_t>(l)]; });
        bits_[lo + j] = a_.has_edge(e) ? 1 : 0;
      }
      bool next_greater = greater;
      bool prune = false;
      if (have_best_ && !greater) {
        for (std::size_t j = 0; j < seg.size(); ++j) {
          if (bits_[lo + j] == best_bits_[lo + j]) continue;
          if (bits_[lo + j] > best_bits_[lo + j]) next_greater = true;
          else prune = true;
          break;
        }
      }
      if (!prune) descend(k + 1, next_greater);
      assigned_ &= ~(Mask{1} << v);
      label_to_vertex_[static_cast<std::size_t>(k)] = -1;
    }
  }

  const SStructure& a_;
  int m_;
  int n_;
  std::vector<int> color_;
  std::vector<int> position_color_;
  std::vector<Mask> twins_;
  std::vector<std::vector<Mask>> segments_;
  std::vector<std::size_t> offsets_;
  std::vector<char> bits_;
  std::vector<char> best_bits_;
  std::vector<int> label_to_vertex_;
  std::vector<int> best_order_;
  Mask assigned_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::vector<int> canonical_order(const SStructure& a, Mask fixed) {
  if (a.empty()) return {};
  return OrderSearch(a, fixed & a.full_mask()).run();
}

SStructure canonical_form(const SStructure& a, std::size_t cap) {
  if (a.size() > cap)
    throw ResourceLimit("canonical form requested for " + std::to_string(a.size()) +
                        " vertices, cap is " + std::to_string(cap));
  const std::vector<int> order = canonical_order(a);
  std::map<Vertex, Vertex> rename;
  for (std::size_t label = 0; label < order.size(); ++label)
    rename[a.vertex_at(order[label])] = static_cast<Vertex>(label + 1);
  return relabel(a, rename);
}

SStructure canonical_form_over(const SStructure& a, const VertexSet& base, std::size_t cap) {
  if (a.size() > cap)
    throw ResourceLimit("relative canonical form requested for " + std::to_string(a.size()) +
                        " vertices, cap is " + std::to_string(cap));
  const Mask fixed = a.mask_of(base);
  const std::vector<int> order = canonical_order(a, fixed);
  std::map<Vertex, Vertex> rename;
  Vertex next = base.empty() ? 1 : base.back() + 1;
  for (int idx : order) {
    if (((fixed >> idx) & 1U) != 0) continue;
    rename[a.vertex_at(idx)] = next++;
  }
  return relabel(a, rename);
}

bool isomorphic(const SStructure& a, const SStructure& b, std::size_t cap) {
  if (a.arity() != b.arity() || a.size() != b.size() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a, cap) == canonical_form(b, cap);
}

}  // namespace abinitio
