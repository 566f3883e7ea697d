#ifndef ABINITIO_RANDOM_HPP
#define ABINITIO_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "abinitio/classes.hpp"
#include "abinitio/structure.hpp"

namespace abinitio {

/// Seeded generator with platform-independent derived draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a seed with a stream index so sub-generators are independent.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

inline constexpr std::size_t kDefaultRandomCap = 16;

/**
 * Random member of a class on vertices 1..size.
 *
 * The n-subsets are visited in a seeded order; each is proposed with
 * probability `density` (for CLQ0, CLQ and GEO possibly grown into a larger
 * clique by up to two random extra vertices) and kept only if the structure
 * stays in the class. The edgeless structure lies in every class, so this
 * never fails; ResourceLimit is thrown when size exceeds `cap`.
 */
SStructure random_structure(ClassId c, int arity, std::size_t size, double density, std::uint64_t seed,
                            std::size_t cap = kDefaultRandomCap);

/// Same procedure starting from `start` and only adding new edges that are not
/// contained in `frozen`; the structure induced on `frozen` is left unchanged.
SStructure random_extension(const SStructure& start, Mask frozen, ClassId c, double density, Rng& rng);

}  // namespace abinitio

#endif  // ABINITIO_RANDOM_HPP
