#include "abinitio/random.hpp"

namespace abinitio {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SStructure random_extension(const SStructure& start, Mask frozen, ClassId c, double density, Rng& rng) {
  const int n = start.arity();
  const Mask full = start.full_mask();
  std::vector<Mask> proposals;
  for_each_k_submask(full, n, [&](Mask e) {
    if (!is_subset(e, frozen)) proposals.push_back(e);
  });
  rng.shuffle(proposals);
  const bool grow = c == ClassId::CLQ0 || c == ClassId::CLQ || c == ClassId::GEO;

  SStructure current = start;
  for (Mask seed_set : proposals) {
    if (!rng.chance(density)) continue;
    Mask clique = seed_set;
    if (grow) {
      for (int extra = 0; extra < 2; ++extra) {
        if (!rng.chance(1.0 / 3.0)) break;
        const Mask room = full & ~clique;
        if (room == 0) break;
        const int pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(popcount(room))));
        int seen = 0;
        for_each_bit(room, [&](int i) {
          if (seen++ == pick) clique |= Mask{1} << i;
        });
      }
    }
    std::vector<Mask> added;
    for_each_k_submask(clique, n, [&](Mask e) {
      if (!is_subset(e, frozen) && !current.has_edge(e)) added.push_back(e);
    });
    if (added.empty()) continue;
    SStructure candidate = with_edges(current, added);
    if (class_member(candidate, c)) current = std::move(candidate);
  }
  return current;
}

SStructure random_structure(ClassId c, int arity, std::size_t size, double density, std::uint64_t seed,
                            std::size_t cap) {
  if (size > cap)
    throw ResourceLimit("random structure of size " + std::to_string(size) + " exceeds cap " +
                        std::to_string(cap));
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must lie in [0, 1]");
  VertexSet universe;
  for (std::size_t i = 1; i <= size; ++i) universe.push_back(static_cast<Vertex>(i));
  const SStructure empty = SStructure::from_masks(arity, std::move(universe), {});
  Rng rng(seed);
  return random_extension(empty, 0, c, density, rng);
}

}  // namespace abinitio
