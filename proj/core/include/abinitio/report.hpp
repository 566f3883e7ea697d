#ifndef ABINITIO_REPORT_HPP
#define ABINITIO_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "abinitio/structure.hpp"

namespace abinitio {

struct Counterexample {
  std::string description;
  std::vector<SStructure> structures;
};

/// Outcome of one verification run. `violations` is empty iff the run passed.
/// At most `kMaxStoredCounterexamples` are stored; `violation_count` is exact.
struct VerificationReport {
  std::string property;
  std::uint64_t instances = 0;
  std::uint64_t violation_count = 0;
  std::vector<Counterexample> violations;
  /// Extra named counters (e.g. unstabilized subsets), reported but not judged.
  std::map<std::string, std::int64_t> notes;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;

  bool passed() const noexcept { return violation_count == 0; }

  void add_violation(Counterexample c);
};

inline constexpr std::size_t kMaxStoredCounterexamples = 8;

}  // namespace abinitio

#endif  // ABINITIO_REPORT_HPP
