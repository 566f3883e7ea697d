#ifndef ABINITIO_DOCUMENT_HPP
#define ABINITIO_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "abinitio/chain.hpp"
#include "abinitio/report.hpp"
#include "abinitio/structure.hpp"
#include "abinitio/verify.hpp"

namespace abinitio {

inline constexpr std::string_view kStructureSchema = "abinitio/structure@1";
inline constexpr std::string_view kReportSchema = "abinitio/report@1";
inline constexpr std::string_view kChainSchema = "abinitio/chain@1";

/// Malformed text or a missing/mistyped field; the message names the line or field.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed document denoting an invalid structure (bad edge size, repeated vertex, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StructureMeta {
  std::optional<std::string> class_tag;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const StructureMeta&, const StructureMeta&) = default;
};

struct StructureDocument {
  SStructure structure;
  StructureMeta meta;
};

/**
 * Canonical text of a structure document:
 *
 *   {
 *     "schema": "abinitio/structure@1",
 *     "arity": 3,
 *     "vertices": [1, 2, 3],
 *     "edges": [
 *       [1, 2, 3]
 *     ],
 *     "meta": {"class": "SYM", "name": "x", "seed": 7}
 *   }
 *
 * Vertices, edges and the vertices inside each edge are sorted; "meta" and
 * each of its keys appear only when set. parse(serialize(x)) == x and
 * serialize(parse(t)) == t for canonical t.
 */
std::string serialize_structure(const SStructure& s, const StructureMeta& meta = {});

/// Accepts any JSON layout with the fields above; "schema" is optional but
/// must match when present, "vertices" defaults to the union of the edges and
/// "arity" to the size of the first edge (3 when there are none).
StructureDocument parse_structure_document(std::string_view text);
inline SStructure parse_structure(std::string_view text) { return parse_structure_document(text).structure; }

/// Bipartite incidence graph: one node per vertex, one per maximal clique.
std::string to_dot(const SStructure& s);

/// Machine-readable report; the runtime is left out so reruns compare byte for byte.
std::string serialize_report(const VerificationReport& r);
/// Several reports with an overall verdict.
std::string serialize_reports(const std::vector<VerificationReport>& rs);
/// One human-readable line per report plus the stored counterexamples.
std::string format_report(const VerificationReport& r);

std::string serialize_chain(const ChainApproximation& c);

/// Reads a JSON object whose keys are VerifyConfig field names; absent keys
/// keep the values in `base`. Unknown keys are a ParseError.
VerifyConfig parse_verify_config(std::string_view text, VerifyConfig base = {});
std::string serialize_verify_config(const VerifyConfig& cfg);

}  // namespace abinitio

#endif  // ABINITIO_DOCUMENT_HPP
