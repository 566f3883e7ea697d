#include "abinitio_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "abinitio/amalgam.hpp"
#include "abinitio/chain.hpp"
#include "abinitio/classes.hpp"
#include "abinitio/cliques.hpp"
#include "abinitio/document.hpp"
#include "abinitio/geometry.hpp"
#include "abinitio/predim.hpp"
#include "abinitio/random.hpp"
#include "abinitio/verify.hpp"

namespace abinitio::cli {
namespace {

// Raised for bad flag values or unreadable files; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string out;
  std::string second;
  std::string replaced;
  std::string replacement;
  std::string config;
  std::string format = "doc";
  std::string subset;
  std::string base;
  std::string kind = "standard";
  std::string class_name;
  std::string suite = "all";
  std::string name;
  std::optional<int> arity;
  std::optional<std::uint64_t> seed;
  std::size_t size = 6;
  double density = 0.3;
  std::optional<std::size_t> max_size;
  std::optional<std::size_t> a_cap;
  std::optional<std::size_t> d_cap;
  std::optional<int> k_max;
  std::optional<std::size_t> steps;
};

int arity_of(const Options& o) { return o.arity.value_or(3); }
std::uint64_t seed_of(const Options& o) { return o.seed.value_or(VerifyConfig{}.seed); }

std::string read_text(const std::string& path) {
  if (path.empty()) throw UsageError("missing input: pass --in FILE (or - for stdin)");
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SStructure read_structure(const std::string& path) { return parse_structure(read_text(path)); }

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    token.erase(std::remove(token.begin(), token.end(), '{'), token.end());
    token.erase(std::remove(token.begin(), token.end(), '}'), token.end());
    if (token.empty()) continue;
    if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw UsageError("bad vertex '" + token + "' in list '" + text + "'");
    out.push_back(static_cast<Vertex>(std::stoul(token)));
  }
  return make_vertex_set(std::move(out));
}

ClassId parse_class_flag(const std::string& name) {
  const auto c = parse_class(name);
  if (!c) throw UsageError("unknown class '" + name + "' (expected CLQ0, CLQ, SYM, GEO or C)");
  return *c;
}

void emit_structure(const Options& o, std::ostream& out, const SStructure& s, const StructureMeta& meta = {}) {
  if (o.format == "dot")
    emit(o, out, to_dot(s));
  else
    emit(o, out, serialize_structure(s, meta));
}

ChainCaps caps_from(const Options& o) {
  ChainCaps caps;
  if (o.max_size) caps.max_stage_size = *o.max_size;
  if (o.a_cap) caps.a_cap = *o.a_cap;
  if (o.d_cap) caps.d_cap = *o.d_cap;
  return caps;
}

VerifyConfig config_from(const Options& o) {
  VerifyConfig cfg;
  if (!o.config.empty()) cfg = parse_verify_config(read_text(o.config));
  if (o.arity) cfg.arity = *o.arity;
  if (o.seed) cfg.seed = *o.seed;
  if (o.max_size) cfg.random_max_size = *o.max_size;
  if (o.a_cap) cfg.a_cap = *o.a_cap;
  if (o.d_cap) cfg.d_cap = *o.d_cap;
  if (o.k_max) cfg.k_max = *o.k_max;
  if (o.steps) cfg.chain_steps = *o.steps;
  return cfg;
}

// ---- command bodies ----

int cmd_cliques(const Options& o, std::ostream& out) {
  const SStructure a = read_structure(o.in);
  std::string text;
  for (const auto& k : maximal_cliques(a).members) text += to_string(k) + "\n";
  emit(o, out, text);
  return kExitOk;
}

int cmd_delta(const Options& o, std::ostream& out) {
  const SStructure a = read_structure(o.in);
  const int value = o.subset.empty() ? predim(a) : predim(induced(a, parse_vertex_list(o.subset)));
  emit(o, out, std::to_string(value) + "\n");
  return kExitOk;
}

int cmd_strong(const Options& o, std::ostream& out) {
  const SStructure a = read_structure(o.in);
  const StrengthResult r = is_strong_with_witness(a, parse_vertex_list(o.subset));
  std::string text = r.strong ? "true\n" : "false\n";
  if (!r.strong)
    text += "witness " + to_string(a.vertices_of(r.witness)) + " relative predim " + std::to_string(r.min_relative) + "\n";
  emit(o, out, text);
  return kExitOk;
}

int cmd_scl(const Options& o, std::ostream& out) {
  const SStructure a = read_structure(o.in);
  emit(o, out, to_string(self_sufficient_closure(a, parse_vertex_list(o.subset))) + "\n");
  return kExitOk;
}

int cmd_class(const Options& o, std::ostream& out) {
  const SStructure a = read_structure(o.in);
  std::string text;
  auto line = [&](ClassId c) {
    const Membership m = class_member(a, c);
    text += std::string(to_string(c)) + (m.member ? " yes" : " no: " + m.reason) + "\n";
  };
  if (o.class_name.empty())
    for (ClassId c : kAllClasses) line(c);
  else
    line(parse_class_flag(o.class_name));
  emit(o, out, text);
  return kExitOk;
}

int cmd_geometry(const Options& o, std::ostream& out) {
  const SStructure a = read_structure(o.in);
  const Geometry g = geometry_of(a);
  std::ostringstream os;
  os << "kind " << (g.is_geometry() ? "geometry" : "pregeometry") << "\n";
  os << "rank " << g.rank(g.full_mask()) << "\n";
  os << "purity " << purity(g) << "\n";
  os << "flats\n";
  for (Mask f : flats(g).flats) os << "  " << to_string(g.vertices_of(f)) << " rank " << g.rank(f) << "\n";
  const int k = o.k_max.value_or(0);
  if (k > 0) {
    const FlatnessResult f = flatness_check(g, k);
    os << "flat " << (f.flat ? "yes" : "no") << " (families up to " << k << ")\n";
    if (!f.flat) {
      os << "witness";
      for (const VertexSet& w : f.witness) os << " " << to_string(w);
      os << "\n";
    }
  }
  emit(o, out, os.str());
  return kExitOk;
}

int cmd_geo_op(const Options& o, std::ostream& out) {
  const SStructure a = read_structure(o.in);
  GeoOperatorOptions opts;
  opts.flatness_k_max = o.k_max.value_or(0);
  emit_structure(o, out, geo_operator(geometry_of(a), a.arity(), opts));
  return kExitOk;
}

int cmd_hat(const Options& o, std::ostream& out) {
  emit_structure(o, out, hat(read_structure(o.in)));
  return kExitOk;
}

int cmd_amalgam(const Options& o, std::ostream& out) {
  AmalgamProblem p;
  p.first = read_structure(o.in);
  p.second = read_structure(o.second);
  p.base = parse_vertex_list(o.base);
  if (o.kind == "standard")
    p.kind = AmalgamKind::Standard;
  else if (o.kind == "geometric")
    p.kind = AmalgamKind::Geometric;
  else
    throw UsageError("--kind must be standard or geometric");
  emit_structure(o, out, amalgamate(p).amalgam);
  return kExitOk;
}

int cmd_surgery(const Options& o, std::ostream& out) {
  emit_structure(o, out,
                 surgery(read_structure(o.in), read_structure(o.replaced), read_structure(o.replacement)));
  return kExitOk;
}

int cmd_build_generic(const Options& o, std::ostream& out, std::ostream& err) {
  const ClassId c = parse_class_flag(o.class_name.empty() ? "C" : o.class_name);
  const ChainApproximation chain = build_generic(c, arity_of(o), o.steps.value_or(30), caps_from(o), seed_of(o));
  std::size_t satisfied = 0;
  for (const auto& r : chain.requirement_log) satisfied += r.satisfied_at ? 1 : 0;
  err << "built " << chain.stages.size() << " stages; final size " << chain.stages.back().size() << "; "
      << satisfied << " of " << chain.requirement_log.size() << " requirements satisfied\n";
  if (o.format == "dot")
    emit(o, out, to_dot(chain.stages.back()));
  else
    emit(o, out, serialize_chain(chain));
  return kExitOk;
}

int cmd_extension_report(const Options& o, std::ostream& out, std::ostream& err) {
  const SStructure m = read_structure(o.in);
  const ClassId c = parse_class_flag(o.class_name.empty() ? "C" : o.class_name);
  VerificationReport r = extension_property_report(m, c, o.a_cap.value_or(3), o.d_cap.value_or(5));
  r.seed = seed_of(o);
  err << format_report(r);
  emit(o, out, serialize_report(r));
  return r.passed() ? kExitOk : kExitViolation;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const VerifyConfig cfg = config_from(o);
  std::vector<PropertyId> selected;
  if (o.suite == "all") {
    selected.assign(kAllProperties.begin(), kAllProperties.end());
  } else {
    const auto p = parse_property(o.suite);
    if (!p) throw UsageError("unknown suite '" + o.suite + "'");
    selected.push_back(*p);
  }
  std::vector<VerificationReport> reports;
  bool passed = true;
  for (PropertyId p : selected) {
    reports.push_back(verify_suite(p, cfg));
    out << format_report(reports.back()) << std::flush;
    passed = passed && reports.back().passed();
  }
  if (!o.out.empty()) emit(o, out, serialize_reports(reports));
  err << (passed ? "all selected suites passed\n" : "violations found\n");
  return passed ? kExitOk : kExitViolation;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const ClassId c = parse_class_flag(o.class_name.empty() ? "C" : o.class_name);
  const std::size_t cap = o.max_size.value_or(kDefaultRandomCap);
  const SStructure s = random_structure(c, arity_of(o), o.size, o.density, seed_of(o), cap);
  StructureMeta meta;
  meta.class_tag = std::string(to_string(c));
  meta.seed = seed_of(o);
  if (!o.name.empty()) meta.name = o.name;
  emit_structure(o, out, s, meta);
  return kExitOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  emit(o, out, to_dot(read_structure(o.in)));
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ab initio S-structures: predimension, geometry, amalgams, generic chains"};
  app.name("abinitio");
  app.require_subcommand(1, 1);

  auto in = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--in", o.in, "Structure document (- for stdin)");
    if (required) opt->required();
  };
  auto out_flag = [&](CLI::App* s) { s->add_option("--out", o.out, "Write output to this file"); };
  auto format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"doc", "dot"}));
  };
  auto arity = [&](CLI::App* s) { s->add_option("--arity", o.arity, "Relation arity n")->check(CLI::Range(2, 31)); };
  auto seed = [&](CLI::App* s) { s->add_option("--seed", o.seed, "Random seed"); };
  auto caps = [&](CLI::App* s) {
    s->add_option("--a-cap", o.a_cap, "Largest base size");
    s->add_option("--d-cap", o.d_cap, "Largest extension size");
  };
  auto klass = [&](CLI::App* s) { s->add_option("--class", o.class_name, "CLQ0, CLQ, SYM, GEO or C"); };

  std::map<CLI::App*, std::function<int()>> bodies;
  auto sub = [&](const std::string& name, const std::string& help, std::function<int()> body) {
    CLI::App* s = app.add_subcommand(name, help);
    bodies[s] = std::move(body);
    return s;
  };

  auto* s = sub("cliques", "List maximal cliques", [&] { return cmd_cliques(o, out); });
  in(s), out_flag(s);
  s = sub("delta", "Predimension of the structure or of --subset", [&] { return cmd_delta(o, out); });
  in(s), out_flag(s);
  s->add_option("--subset", o.subset, "Comma-separated vertices");
  s = sub("strong", "Is --subset strong (self-sufficient)?", [&] { return cmd_strong(o, out); });
  in(s), out_flag(s);
  s->add_option("--subset", o.subset, "Comma-separated vertices")->required();
  s = sub("scl", "Self-sufficient closure of --subset", [&] { return cmd_scl(o, out); });
  in(s), out_flag(s);
  s->add_option("--subset", o.subset, "Comma-separated vertices")->required();
  s = sub("class", "Class membership with reasons", [&] { return cmd_class(o, out); });
  in(s), out_flag(s), klass(s);
  s = sub("geometry", "Rank, flats, purity and (with --k-max) flatness", [&] { return cmd_geometry(o, out); });
  in(s), out_flag(s);
  s->add_option("--k-max", o.k_max, "Largest flat family for the flatness check");
  s = sub("geo-op", "The geo structure of the associated geometry", [&] { return cmd_geo_op(o, out); });
  in(s), out_flag(s), format(s);
  s->add_option("--k-max", o.k_max, "Also check flatness up to this family size");
  s = sub("hat", "hat(A): the geo structure carried by the geometry of A", [&] { return cmd_hat(o, out); });
  in(s), out_flag(s), format(s);
  s = sub("amalgam", "Amalgamate --in and --second over --base", [&] { return cmd_amalgam(o, out); });
  in(s), out_flag(s), format(s);
  s->add_option("--second", o.second, "Second side")->required();
  s->add_option("--base", o.base, "Comma-separated base vertices");
  s->add_option("--kind", o.kind, "standard or geometric")->check(CLI::IsMember({"standard", "geometric"}));
  s = sub("surgery", "Replace a strong SYM substructure by a CLQ structure with the same geometry",
          [&] { return cmd_surgery(o, out); });
  in(s), out_flag(s), format(s);
  s->add_option("--replaced", o.replaced, "Substructure to replace")->required();
  s->add_option("--replacement", o.replacement, "Replacement on the same universe")->required();
  s = sub("build-generic", "Build a finite approximation of a generic structure",
          [&] { return cmd_build_generic(o, out, err); });
  out_flag(s), format(s), arity(s), seed(s), caps(s), klass(s);
  s->add_option("--steps", o.steps, "Amalgamation steps");
  s->add_option("--max-size", o.max_size, "Stage size cap");
  s = sub("extension-report", "Which extension requirements lack a strong embedding",
          [&] { return cmd_extension_report(o, out, err); });
  in(s), out_flag(s), seed(s), caps(s), klass(s);
  s = sub("verify", "Run verification suites", [&] { return cmd_verify(o, out, err); });
  out_flag(s), arity(s), seed(s), caps(s);
  s->add_option("--suite", o.suite, "Property id or all");
  s->add_option("--config", o.config, "JSON file with verification bounds");
  s->add_option("--k-max", o.k_max, "Largest flat family for FLATNESS");
  s->add_option("--steps", o.steps, "Chain steps for chain-based suites");
  s->add_option("--max-size", o.max_size, "Largest random instance");
  s = sub("gen", "Random member of a class", [&] { return cmd_gen(o, out); });
  out_flag(s), format(s), arity(s), seed(s), klass(s);
  s->add_option("--size", o.size, "Number of vertices");
  s->add_option("--density", o.density, "Edge proposal probability")->check(CLI::Range(0.0, 1.0));
  s->add_option("--max-size", o.max_size, "Size cap");
  s->add_option("--name", o.name, "Name stored in the document");
  s = sub("export-dot", "Clique incidence graph in DOT", [&] { return cmd_export_dot(o, out); });
  in(s), out_flag(s);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    return bodies.at(chosen)();
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid structure: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace abinitio::cli
