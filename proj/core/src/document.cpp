#include "abinitio/document.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "abinitio/classes.hpp"
#include "abinitio/cliques.hpp"

namespace abinitio {

using json = nlohmann::json;

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string join_vertices(const VertexSet& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

json structure_json(const SStructure& s) {
  json edges = json::array();
  for (const auto& e : s.edges()) edges.push_back(e);
  return json{{"arity", s.arity()}, {"vertices", s.universe()}, {"edges", std::move(edges)}};
}

json report_json(const VerificationReport& r) {
  json violations = json::array();
  for (const Counterexample& c : r.violations) {
    json structures = json::array();
    for (const SStructure& s : c.structures) structures.push_back(structure_json(s));
    violations.push_back(json{{"description", c.description}, {"structures", std::move(structures)}});
  }
  json notes = json::object();
  for (const auto& [key, value] : r.notes) notes[key] = value;
  return json{{"schema", kReportSchema},
              {"property", r.property},
              {"seed", r.seed},
              {"instances", r.instances},
              {"violation_count", r.violation_count},
              {"passed", r.passed()},
              {"notes", std::move(notes)},
              {"violations", std::move(violations)}};
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON (" + e.what() + ")");
  }
}

std::uint64_t as_natural(const json& j, const std::string& field, std::uint64_t max = UINT64_MAX) {
  if (!j.is_number_unsigned())
    throw ParseError("field '" + field + "': expected a non-negative integer, got " + j.dump());
  const auto v = j.get<std::uint64_t>();
  if (v > max) throw ParseError("field '" + field + "': " + std::to_string(v) + " is out of range");
  return v;
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ParseError("field '" + field + "': expected a string, got " + j.dump());
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "': expected an array, got " + j.dump());
  return j;
}

VertexSet as_vertices(const json& j, const std::string& field) {
  VertexSet out;
  std::size_t i = 0;
  for (const json& v : as_array(j, field)) {
    out.push_back(static_cast<Vertex>(as_natural(v, field + "[" + std::to_string(i) + "]", UINT32_MAX)));
    ++i;
  }
  return out;
}

}  // namespace

std::string serialize_structure(const SStructure& s, const StructureMeta& meta) {
  std::string out = "{\n";
  out += "  \"schema\": " + quoted(std::string(kStructureSchema)) + ",\n";
  out += "  \"arity\": " + std::to_string(s.arity()) + ",\n";
  out += "  \"vertices\": " + join_vertices(s.universe()) + ",\n";
  const std::vector<VertexSet> edges = s.edges();
  if (edges.empty()) {
    out += "  \"edges\": []";
  } else {
    out += "  \"edges\": [\n";
    for (std::size_t i = 0; i < edges.size(); ++i)
      out += "    " + join_vertices(edges[i]) + (i + 1 < edges.size() ? ",\n" : "\n");
    out += "  ]";
  }
  std::vector<std::string> fields;
  if (meta.class_tag) fields.push_back("\"class\": " + quoted(*meta.class_tag));
  if (meta.name) fields.push_back("\"name\": " + quoted(*meta.name));
  if (meta.seed) fields.push_back("\"seed\": " + std::to_string(*meta.seed));
  if (!fields.empty()) {
    out += ",\n  \"meta\": {";
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? ", " : "") + fields[i];
    out += "}";
  }
  return out + "\n}\n";
}

StructureDocument parse_structure_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "schema" && key != "arity" && key != "vertices" && key != "edges" && key != "meta")
      throw ParseError("field '" + key + "': unknown field");
  if (doc.contains("schema") && as_string(doc["schema"], "schema") != kStructureSchema)
    throw ParseError("field 'schema': expected " + std::string(kStructureSchema));
  std::vector<VertexSet> edges;
  if (doc.contains("edges")) {
    std::size_t i = 0;
    for (const json& e : as_array(doc["edges"], "edges")) {
      edges.push_back(as_vertices(e, "edges[" + std::to_string(i) + "]"));
      ++i;
    }
  }
  // Without "arity": the size of the first edge, or 3 for an edgeless document.
  int arity = 3;
  if (doc.contains("arity"))
    arity = static_cast<int>(as_natural(doc["arity"], "arity", 64));
  else if (!edges.empty())
    arity = static_cast<int>(edges.front().size());
  VertexSet universe;
  if (doc.contains("vertices")) {
    universe = as_vertices(doc["vertices"], "vertices");
  } else {
    for (const auto& e : edges) universe.insert(universe.end(), e.begin(), e.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  }

  StructureDocument out;
  try {
    out.structure = SStructure(arity, std::move(universe), edges);
  } catch (const ResourceLimit&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }

  if (doc.contains("meta")) {
    const json& meta = doc["meta"];
    if (!meta.is_object()) throw ParseError("field 'meta': expected an object");
    for (const auto& [key, value] : meta.items()) {
      if (key == "class") {
        const std::string tag = as_string(value, "meta.class");
        if (!parse_class(tag)) throw ParseError("field 'meta.class': unknown class " + tag);
        out.meta.class_tag = tag;
      } else if (key == "name") {
        out.meta.name = as_string(value, "meta.name");
      } else if (key == "seed") {
        out.meta.seed = as_natural(value, "meta.seed");
      } else {
        throw ParseError("field 'meta." + key + "': unknown field");
      }
    }
  }
  return out;
}

std::string to_dot(const SStructure& s) {
  std::ostringstream os;
  os << "graph structure {\n";
  os << "  // arity " << s.arity() << "; clique nodes are boxes\n";
  os << "  node [shape=circle];\n";
  for (Vertex v : s.universe()) os << "  v" << v << " [label=\"" << v << "\"];\n";
  const CliqueFamily family = maximal_cliques(s);
  if (!family.members.empty()) os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < family.members.size(); ++i)
    os << "  k" << i << " [label=\"" << to_string(family.members[i]) << "\"];\n";
  for (std::size_t i = 0; i < family.members.size(); ++i)
    for (Vertex v : family.members[i]) os << "  k" << i << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string serialize_report(const VerificationReport& r) { return report_json(r).dump(2) + "\n"; }

std::string serialize_reports(const std::vector<VerificationReport>& rs) {
  json all = json::array();
  bool passed = true;
  for (const auto& r : rs) {
    all.push_back(report_json(r));
    passed = passed && r.passed();
  }
  return json{{"schema", kReportSchema}, {"passed", passed}, {"reports", std::move(all)}}.dump(2) + "\n";
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.property << ": " << r.instances << " instances, "
     << r.violation_count << " violations, seed " << r.seed;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", r.runtime_ms);
  os << ", " << buf << " ms\n";
  for (const auto& [key, value] : r.notes) os << "  " << key << " = " << value << "\n";
  for (const Counterexample& c : r.violations) {
    os << "  counterexample: " << c.description << "\n";
    for (const SStructure& s : c.structures) os << "    " << structure_json(s).dump() << "\n";
  }
  return os.str();
}

std::string serialize_chain(const ChainApproximation& c) {
  json stages = json::array();
  for (const SStructure& s : c.stages) stages.push_back(structure_json(s));
  json log = json::array();
  for (const RequirementRecord& r : c.requirement_log) {
    log.push_back(json{{"first_seen", r.first_seen},
                       {"base", r.base},
                       {"extension", structure_json(r.extension)},
                       {"key", r.key},
                       {"satisfied_at", r.satisfied_at ? json(*r.satisfied_at) : json(nullptr)},
                       {"scheduled", r.scheduled}});
  }
  return json{{"schema", kChainSchema},
              {"class", std::string(to_string(c.class_id))},
              {"arity", c.arity},
              {"seed", c.seed},
              {"steps_requested", c.steps_requested},
              {"caps", {{"max_stage_size", c.caps.max_stage_size}, {"a_cap", c.caps.a_cap}, {"d_cap", c.caps.d_cap}}},
              {"stages", std::move(stages)},
              {"requirements", std::move(log)}}
             .dump(2) +
         "\n";
}

namespace {

using SizeField = std::size_t VerifyConfig::*;

const std::map<std::string, SizeField>& size_fields() {
  static const std::map<std::string, SizeField> fields{
      {"exhaustive_max_size", &VerifyConfig::exhaustive_max_size},
      {"random_instances", &VerifyConfig::random_instances},
      {"random_max_size", &VerifyConfig::random_max_size},
      {"amalgam_instances", &VerifyConfig::amalgam_instances},
      {"amalgam_side_max", &VerifyConfig::amalgam_side_max},
      {"geometry_instances", &VerifyConfig::geometry_instances},
      {"surgery_instances", &VerifyConfig::surgery_instances},
      {"geo_exhaustive_size", &VerifyConfig::geo_exhaustive_size},
      {"geo_dependent_size", &VerifyConfig::geo_dependent_size},
      {"c_exhaustive_size", &VerifyConfig::c_exhaustive_size},
      {"flatness_instances", &VerifyConfig::flatness_instances},
      {"flatness_max_size", &VerifyConfig::flatness_max_size},
      {"chain_steps", &VerifyConfig::chain_steps},
      {"stage_cap", &VerifyConfig::stage_cap},
      {"a_cap", &VerifyConfig::a_cap},
      {"d_cap", &VerifyConfig::d_cap},
  };
  return fields;
}

}  // namespace

VerifyConfig parse_verify_config(std::string_view text, VerifyConfig base) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("config: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (auto it = size_fields().find(key); it != size_fields().end()) {
      base.*(it->second) = static_cast<std::size_t>(as_natural(value, key));
    } else if (key == "arity") {
      base.arity = static_cast<int>(as_natural(value, key, 64));
    } else if (key == "k_max") {
      base.k_max = static_cast<int>(as_natural(value, key, 64));
    } else if (key == "seed") {
      base.seed = as_natural(value, key);
    } else if (key == "random_arities") {
      base.random_arities.clear();
      std::size_t i = 0;
      for (const json& n : as_array(value, key)) {
        base.random_arities.push_back(static_cast<int>(as_natural(n, key + "[" + std::to_string(i) + "]", 64)));
        ++i;
      }
    } else {
      throw ParseError("field '" + key + "': unknown config field");
    }
  }
  return base;
}

std::string serialize_verify_config(const VerifyConfig& cfg) {
  json doc{{"arity", cfg.arity}, {"seed", cfg.seed}, {"k_max", cfg.k_max}, {"random_arities", cfg.random_arities}};
  for (const auto& [key, field] : size_fields()) doc[key] = cfg.*field;
  return doc.dump(2) + "\n";
}

}  // namespace abinitio
