#ifndef ABINITIO_PREDIM_HPP
#define ABINITIO_PREDIM_HPP

#include <vector>

#include "abinitio/cliques.hpp"

namespace abinitio {

/// max(0, m - (n - 1)).
constexpr int card_star(int m, int n) noexcept { return m - (n - 1) > 0 ? m - (n - 1) : 0; }

/// Sum of card_star(|K|, n) over the maximal cliques of a.
int s_value(const SStructure& a);

/// |A| - s(A). May be negative.
int predim(const SStructure& a);

/// predim(a) - predim(induced(a, b)). Throws std::invalid_argument if b leaves the universe.
int predim_rel(const SStructure& a, const VertexSet& b);

/**
 * Evaluates the predimension of every induced substructure of one ambient
 * structure from its maximal cliques.
 *
 * Every clique of an induced substructure X lies in a maximal clique K of the
 * ambient structure, so the maximal cliques of X are the inclusion-maximal
 * sets among {K & X : |K & X| >= n}. In a structure whose maximal cliques
 * pairwise meet in fewer than n points these traces are already maximal.
 */
class PredimTable {
 public:
  explicit PredimTable(const SStructure& a);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return size_; }
  Mask full_mask() const noexcept { return low_mask(size_); }
  const std::vector<Mask>& cliques() const noexcept { return cliques_; }

  /// True iff distinct maximal cliques meet in fewer than arity points.
  bool clique_intersections_small() const noexcept { return small_meets_; }

  int s_value(Mask x) const;
  int predim(Mask x) const { return popcount(x) - s_value(x); }

  /// Vertices lying in at least one maximal clique.
  Mask clique_support() const noexcept { return support_; }

  /// predim over all 2^size subsets. Throws ResourceLimit above kMaxExhaustiveVertices.
  std::vector<int> all_predims() const;

 private:
  int arity_;
  std::size_t size_;
  std::vector<Mask> cliques_;
  Mask support_ = 0;
  bool small_meets_ = true;
};

/// Outcome of a strength test. When not strong, `witness` is a superset X of
/// the base with predim(X) < predim(base), chosen with minimal predim and then
/// minimal size and mask.
struct StrengthResult {
  bool strong = true;
  int min_relative = 0;
  Mask witness = 0;

  explicit operator bool() const noexcept { return strong; }
};

/// Minimum of predim(X) - predim(base) over base <= X <= within, with argmin.
StrengthResult strength(const PredimTable& t, Mask base, Mask within);
inline StrengthResult strength(const PredimTable& t, Mask base) {
  return strength(t, base, t.full_mask());
}

/// B <= A: every intermediate superset of B in A has nonnegative relative predimension.
bool is_strong(const SStructure& a, const VertexSet& b);
StrengthResult is_strong_with_witness(const SStructure& a, const VertexSet& b);

/// Smallest strong superset of x inside the ambient structure, found by
/// repeatedly absorbing an inclusion-minimal superset of negative relative
/// predimension. When clique intersections are small the result is
/// cross-checked against the least minimizer of predim over supersets of x.
Mask self_sufficient_closure(const PredimTable& t, Mask x);
VertexSet self_sufficient_closure(const SStructure& a, const VertexSet& x);

/// d(X) = min{predim(Y) : X <= Y <= A} for every subset X, via a superset-min
/// transform of the predimension table.
std::vector<int> dimension_table(const PredimTable& t);

}  // namespace abinitio

#endif  // ABINITIO_PREDIM_HPP
