#ifndef ABINITIO_TYPES_HPP
#define ABINITIO_TYPES_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace abinitio {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

/// Subset of a structure's universe, bit i standing for the i-th smallest vertex.
using Mask = std::uint32_t;

/// Hard limit for anything that materializes a table over all subsets.
inline constexpr std::size_t kMaxExhaustiveVertices = 20;

/// Storage limit imposed by the width of Mask.
inline constexpr std::size_t kMaxVertices = 32;

/// Thrown when an exhaustive computation would exceed its configured budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a construction fails a postcondition that the theory guarantees.
/// Seeing one means either a bug or a counterexample, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

VertexSet make_vertex_set(std::initializer_list<Vertex> vs);
VertexSet make_vertex_set(std::vector<Vertex> vs);

std::string to_string(const VertexSet& vs);

inline int popcount(Mask m) noexcept { return std::popcount(m); }

inline bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

inline Mask low_mask(std::size_t k) noexcept {
  return k >= 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << k) - 1);
}

/// Calls f(bit_index) for each set bit, lowest first.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

/// Calls f(sub) for every submask of m, including 0 and m itself, in increasing order.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask sub = 0;
  while (true) {
    f(sub);
    if (sub == m) break;
    sub = ((sub | ~m) + 1) & m;
  }
}

/// Calls f(sub) for every k-element submask of m in colexicographic order.
template <class F>
void for_each_k_submask(Mask m, int k, F&& f) {
  std::vector<int> bits;
  for_each_bit(m, [&](int i) { bits.push_back(i); });
  const int total = static_cast<int>(bits.size());
  if (k < 0 || k > total) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  // Gosper over positions within `bits`, then scattered back to m.
  std::uint64_t pos = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << total;
  while (pos < limit) {
    Mask sub = 0;
    std::uint64_t p = pos;
    while (p != 0) {
      sub |= Mask{1} << bits[std::countr_zero(p)];
      p &= p - 1;
    }
    f(sub);
    const std::uint64_t c = pos & (~pos + 1);
    const std::uint64_t r = pos + c;
    pos = (((r ^ pos) >> 2) / c) | r;
  }
}

}  // namespace abinitio

#endif  // ABINITIO_TYPES_HPP
