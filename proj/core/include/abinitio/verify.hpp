#ifndef ABINITIO_VERIFY_HPP
#define ABINITIO_VERIFY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "abinitio/report.hpp"
#include "abinitio/structure.hpp"

namespace abinitio {

enum class PropertyId {
  SUBMODULARITY,
  STRONG_TRANSITIVE,
  AMALGAM_PREDIM,
  GEO_AMALGAM_CLOSED,
  LARGE_DEPENDENT_CLIQUE,
  DELTA_GEQ_D,
  PURE_CLQ_IS_GEO,
  CHANGING_LEMMA,
  PREDIM_CLOSED_EQ_DIM,
  HAT_STRONG,
  THEOREM_GEOMETRY_EQUALITY,
  REDUCT_REMARK,
  GENERIC_GEO_CLOSED_SETS,
  GEO_IDEMPOTENT,
  FLATNESS,
};

inline constexpr std::array<PropertyId, 15> kAllProperties{
    PropertyId::SUBMODULARITY,          PropertyId::STRONG_TRANSITIVE,
    PropertyId::AMALGAM_PREDIM,         PropertyId::GEO_AMALGAM_CLOSED,
    PropertyId::LARGE_DEPENDENT_CLIQUE, PropertyId::DELTA_GEQ_D,
    PropertyId::PURE_CLQ_IS_GEO,        PropertyId::CHANGING_LEMMA,
    PropertyId::PREDIM_CLOSED_EQ_DIM,   PropertyId::HAT_STRONG,
    PropertyId::THEOREM_GEOMETRY_EQUALITY, PropertyId::REDUCT_REMARK,
    PropertyId::GENERIC_GEO_CLOSED_SETS, PropertyId::GEO_IDEMPOTENT,
    PropertyId::FLATNESS,
};

std::string_view to_string(PropertyId p) noexcept;
std::optional<PropertyId> parse_property(std::string_view s) noexcept;

/// Bounds for every oracle. Exhaustive sweeps use `arity`; random sweeps draw
/// the arity from `random_arities`.
struct VerifyConfig {
  int arity = 3;
  std::uint64_t seed = 20240601;

  std::size_t exhaustive_max_size = 5;      // all edge sets, CLQ0 filter
  std::size_t random_instances = 10000;     // SUBMODULARITY, STRONG_TRANSITIVE
  std::size_t random_max_size = 8;
  std::vector<int> random_arities{3, 4};

  std::size_t amalgam_instances = 1000;     // AMALGAM_PREDIM, GEO_AMALGAM_CLOSED
  std::size_t amalgam_side_max = 8;
  std::size_t geometry_instances = 1000;    // DELTA_GEQ_D, PURE_CLQ_IS_GEO
  std::size_t surgery_instances = 200;

  std::size_t geo_exhaustive_size = 7;      // REDUCT_REMARK, GEO_IDEMPOTENT
  std::size_t geo_dependent_size = 6;       // LARGE_DEPENDENT_CLIQUE
  std::size_t c_exhaustive_size = 6;        // PREDIM_CLOSED_EQ_DIM

  int k_max = 3;                            // FLATNESS family size
  std::size_t flatness_instances = 200;
  std::size_t flatness_max_size = 8;

  std::size_t chain_steps = 30;
  std::size_t stage_cap = 12;
  std::size_t a_cap = 3;
  std::size_t d_cap = 5;
};

/// Runs one oracle. Throws std::invalid_argument on a bad configuration and
/// ResourceLimit when a bound exceeds what exhaustive search can handle.
VerificationReport verify_suite(PropertyId p, const VerifyConfig& cfg);

/// Calls f(structure) for every structure on vertices 1..m with the given
/// arity (all 2^C(m, n) edge sets). ResourceLimit above 2^24 edge sets.
void for_each_structure(int arity, std::size_t m, const std::function<void(const SStructure&)>& f);

/// Calls f for every GEO structure on vertices 1..m, found by enumerating
/// clique families that pairwise meet in fewer than n-1 points.
void for_each_geo_structure(int arity, std::size_t m, const std::function<void(const SStructure&)>& f);

/// Greedy shrinking: repeatedly drops a vertex or an edge while `fails` holds.
SStructure shrink(SStructure a, const std::function<bool(const SStructure&)>& fails);

}  // namespace abinitio

#endif  // ABINITIO_VERIFY_HPP
