#ifndef ABINITIO_CHAIN_HPP
#define ABINITIO_CHAIN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "abinitio/classes.hpp"
#include "abinitio/predim.hpp"
#include "abinitio/report.hpp"

namespace abinitio {

/// hat(A) = G(A)^geo on the universe of A. Requires A in CLQ with every
/// (n-1)-subset independent in G(A). Asserts predim(hat(A)) = rank of the universe.
SStructure hat(const SStructure& a);

/**
 * All strong extensions of `a` inside class `c` with at most `d_cap` vertices,
 * one per isomorphism type over `a` (fixed pointwise). Each is returned in
 * canonical form relative to the universe of `a`, ordered by size and then by
 * edge list. Includes `a` itself. Extensions are grown one vertex at a time
 * from representatives of the previous size, which is complete because every
 * class here is closed under induced substructures.
 */
std::vector<SStructure> enumerate_strong_extensions(const SStructure& a, ClassId c, std::size_t d_cap);

/// Caches extension types per isomorphism type of base.
class ExtensionCatalog {
 public:
  ExtensionCatalog(ClassId c, std::size_t d_cap) : class_(c), d_cap_(d_cap) {}

  /// Proper strong extensions of `base` (|D| > |base|), with base vertices
  /// keeping their identifiers and new vertices numbered above max(base).
  std::vector<SStructure> proper_extensions(const SStructure& base);

  ClassId class_id() const noexcept { return class_; }
  std::size_t d_cap() const noexcept { return d_cap_; }

 private:
  ClassId class_;
  std::size_t d_cap_;
  std::unordered_map<std::string, std::vector<SStructure>> by_type_;
};

/// Strong embedding of `d` into `m` fixing `base` pointwise: the image induces
/// a copy of `d` and is strong in `m`. Returns the image of every vertex of `d`.
std::optional<std::map<Vertex, Vertex>> find_strong_embedding(const SStructure& d, const VertexSet& base,
                                                              const SStructure& m, const PredimTable& mt);

/// One (base, extension) requirement of the extension property.
struct Requirement {
  VertexSet base;
  SStructure extension;  // canonical over base
  std::string key;       // stable identity across stages
};

/// Every requirement with a strong base of at most a_cap vertices and a proper
/// strong extension of at most d_cap vertices, sorted by key.
std::vector<Requirement> list_requirements(const SStructure& m, std::size_t a_cap, ExtensionCatalog& catalog);

struct ChainCaps {
  std::size_t max_stage_size = 12;
  std::size_t a_cap = 4;
  std::size_t d_cap = 6;
};

struct RequirementRecord {
  std::size_t first_seen = 0;
  VertexSet base;
  SStructure extension;
  std::string key;
  std::optional<std::size_t> satisfied_at;
  bool scheduled = false;  // satisfied by an amalgamation step aimed at it
};

/**
 * Finite approximation M_0 <= M_1 <= ... of a generic structure.
 *
 * Each step amalgamates the current stage with the extension of the oldest
 * pending requirement (ties broken by a seeded per-requirement rank) whose
 * amalgam fits under max_stage_size. Requirements that never fit stay pending.
 */
struct ChainApproximation {
  ClassId class_id = ClassId::C;
  int arity = 3;
  std::uint64_t seed = 0;
  std::size_t steps_requested = 0;
  ChainCaps caps;
  std::vector<SStructure> stages;
  /// Every requirement ever seen, ordered by first sighting and then key.
  std::vector<RequirementRecord> requirement_log;
};

/// Builds the chain. Throws std::invalid_argument for CLQ0 (no strong
/// singletons) and ResourceLimit when max_stage_size exceeds the exhaustive limit.
ChainApproximation build_generic(ClassId c, int arity, std::size_t steps, const ChainCaps& caps,
                                 std::uint64_t seed);

struct RequirementStatus {
  Requirement requirement;
  bool satisfied = false;
};

std::vector<RequirementStatus> requirement_status(const SStructure& m, ClassId c, std::size_t a_cap,
                                                  std::size_t d_cap);

/// Reports every requirement without a strong embedding as a violation.
/// Throws std::invalid_argument when m is not in c.
VerificationReport extension_property_report(const SStructure& m, ClassId c, std::size_t a_cap,
                                             std::size_t d_cap);

/// Serialization key of a structure: arity, universe and sorted edges.
std::string structure_key(const SStructure& s);

}  // namespace abinitio

#endif  // ABINITIO_CHAIN_HPP
