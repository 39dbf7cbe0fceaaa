#include "mckay/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mckay/error.hpp"
#include "mckay/shapes.hpp"

namespace mckay {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kStar = "★";

Json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json components_json(const McKayGraph& g) {
  Json out = Json::array();
  for (const auto& verts : weak_components(g.adjacency)) {
    const IntMatrix part = induced_subgraph(g.adjacency, verts);
    const ShapeLabel l = classify_component(part);
    Json c;
    c["vertices"] = verts;
    c["principal"] = std::find(verts.begin(), verts.end(), g.trivial_vertex) != verts.end();
    c["shape"] = l.to_string();
    if (l.hedgehog_alias) c["alias"] = "Hedgehog(4)";
    if (l.dynkin_order) c["dynkin_order"] = *l.dynkin_order;
    out.push_back(std::move(c));
  }
  return out;
}

void dot_body(std::ostream& os, const McKayGraph& g, const std::vector<int>& verts, bool directed) {
  for (int v : verts) {
    os << "  v" << v << " [label=\"" << g.dims[static_cast<std::size_t>(v)];
    if (v == g.trivial_vertex) os << " " << kStar;
    os << "\"];\n";
  }
  const char* arrow = directed ? " -> " : " -- ";
  for (int i : verts) {
    for (int j : verts) {
      const std::int64_t m = g.adjacency(i, j);
      if (m == 0) continue;
      const bool pair = g.adjacency(j, i) == m;
      if (pair && j < i) continue;
      os << "  v" << i << arrow << "v" << j;
      std::vector<std::string> attrs;
      if (m > 1) attrs.push_back("label=\"" + std::to_string(m) + "\"");
      if (directed && pair) attrs.push_back("dir=none");
      if (!attrs.empty()) {
        os << " [";
        for (std::size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
        os << "]";
      }
      os << ";\n";
    }
  }
}

int order_cap_from_env(std::ostream& err, bool& ok) {
  ok = true;
  const char* env = std::getenv("MCKAY_ORDER_CAP");
  if (!env || !*env) return 1024;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1 << 20) {
    err << "error: MCKAY_ORDER_CAP must be a positive integer\n";
    ok = false;
    return 0;
  }
  return static_cast<int>(v);
}

bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  file << text;
  return true;
}

bool input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::InvalidAction:
    case ErrorCode::ClosureDiverged:
    case ErrorCode::NoSuchIrrep:
    case ErrorCode::SelectorEmpty:
    case ErrorCode::PreconditionViolated: return true;
    default: return false;
  }
}

}  // namespace

std::string graph_to_dot(const McKayGraph& g, const GraphDocumentOptions& options) {
  std::ostringstream os;
  const bool directed = !g.undirected;
  const char* kind = directed ? "digraph" : "graph";
  if (!options.components) {
    std::vector<int> all(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) all[static_cast<std::size_t>(v)] = v;
    os << kind << " mckay {\n";
    dot_body(os, g, all, directed);
    os << "}\n";
    return os.str();
  }
  int index = 0;
  for (const auto& verts : weak_components(g.adjacency)) {
    const std::string shape = classify_component(induced_subgraph(g.adjacency, verts)).to_string();
    os << kind << " component" << index++ << " {\n  label=\"" << shape << "\";\n";
    dot_body(os, g, verts, directed);
    os << "}\n";
  }
  return os.str();
}

std::string graph_to_json(const McKayGraph& g, const std::string& spec, const std::string& selector,
                          const GraphDocumentOptions& options) {
  Json doc;
  doc["group"] = spec;
  doc["rho"] = selector;
  Json vertices = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    vertices.push_back({{"id", v}, {"dim", g.dims[static_cast<std::size_t>(v)]}, {"trivial", v == g.trivial_vertex}});
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (int i = 0; i < g.num_vertices(); ++i) {
    for (int j = 0; j < g.num_vertices(); ++j) {
      const std::int64_t m = g.adjacency(i, j);
      if (m == 0) continue;
      const bool pair = g.adjacency(j, i) == m;
      if (pair && j < i) continue;
      edges.push_back({{"from", i}, {"to", j}, {"mult", m}, {"undirected", pair}});
    }
  }
  doc["edges"] = std::move(edges);
  doc["flags"] = {{"undirected", g.undirected}, {"loopless", g.loopless}, {"simply_laced", g.simply_laced}};
  if (options.components) doc["components"] = components_json(g);
  return doc.dump(2) + "\n";
}

std::string table_to_json(const CharacterTable& ct, const std::string& spec) {
  const auto& cd = *ct.classes;
  const auto& names = ct.group->element_names();
  Json doc;
  doc["group"] = spec;
  doc["order"] = ct.group->order();
  doc["exponent"] = ct.exponent();
  doc["prime"] = ct.prime;
  Json classes = Json::array();
  for (int k = 0; k < cd.num_classes(); ++k) {
    const auto kk = static_cast<std::size_t>(k);
    classes.push_back({{"representative", names[static_cast<std::size_t>(cd.representatives[kk])]},
                       {"size", cd.class_sizes[kk]},
                       {"order", cd.class_orders[kk]}});
  }
  doc["classes"] = std::move(classes);
  doc["degrees"] = ct.degrees;
  Json chars = Json::array();
  for (int i = 0; i < ct.r; ++i) {
    Json values = Json::array();
    for (const auto& v : ct.values[static_cast<std::size_t>(i)]) {
      Json coeffs = Json::array();
      for (const auto& c : v.coeffs()) coeffs.push_back(big_json(c));
      values.push_back({{"order", v.order()}, {"coeffs", std::move(coeffs)}});
    }
    chars.push_back({{"degree", ct.degrees[static_cast<std::size_t>(i)]}, {"values", std::move(values)}});
  }
  doc["characters"] = std::move(chars);
  return doc.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report, bool timings) {
  Json doc;
  doc["suite"] = report.suite;
  doc["pass"] = report.pass();
  doc["checks"] = report.records.size();
  doc["failures"] = report.failures();
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json j{{"id", r.id}, {"anchor", r.anchor}, {"inputs", r.inputs}, {"expected", r.expected}, {"observed", r.observed},
           {"pass", r.pass}};
    if (timings) j["runtime_ms"] = r.runtime_ms;
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report, bool timings) {
  std::ostringstream os;
  for (const auto& r : report.records) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << " [" << r.inputs << "] " << r.observed;
    if (!r.pass) os << " (expected " << r.expected << ")";
    if (timings) os << " " << static_cast<long long>(r.runtime_ms) << " ms";
    os << "\n";
  }
  os << report.suite << ": " << report.records.size() - static_cast<std::size_t>(report.failures()) << "/"
     << report.records.size() << " passed\n";
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"McKay graphs of finite groups"};
  app.require_subcommand(1);

  std::string spec, rho = "faithful-selfdual-min", format, output, suite = "all";
  bool components = false, timings = false;
  int jobs = 1;

  auto* graph = app.add_subcommand("graph", "McKay graph of a group and representation");
  graph->add_option("spec", spec, "group spec, e.g. binary:T")->required();
  graph->add_option("--rho", rho, "irrep:k | faithful-selfdual-min | charvec:m0,... | pullback:<selector>");
  graph->add_option("--out", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_flag("--components", components, "one document per connected component");
  graph->add_option("--output", output, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "trees | forests | identities | sweep | all");
  verify->add_option("--out", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", jobs, "parallel cases")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "include runtimes");
  verify->add_option("--output", output, "write to a file instead of stdout");

  auto* chartab = app.add_subcommand("chartab", "character table");
  chartab->add_option("spec", spec, "group spec")->required();
  chartab->add_option("--out", format, "json")->check(CLI::IsMember({"json"}));
  chartab->add_option("--output", output, "write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }

  bool cap_ok = false;
  BuildOptions build;
  build.order_cap = order_cap_from_env(err, cap_ok);
  if (!cap_ok) return 2;

  try {
    if (graph->parsed()) {
      const GroupPtr g = build_group(spec, build);
      const CharacterTable ct = compute_character_table(g);
      const McKayGraph mg = build_mckay_graph(ct, parse_rho_selector(rho));
      GraphDocumentOptions o{components};
      const std::string text = format == "json" ? graph_to_json(mg, spec, rho, o) : graph_to_dot(mg, o);
      return emit(text, output, out, err) ? 0 : 2;
    }
    if (chartab->parsed()) {
      const GroupPtr g = build_group(spec, build);
      return emit(table_to_json(compute_character_table(g), spec), output, out, err) ? 0 : 2;
    }
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      err << "error: unknown suite '" << suite << "'\n";
      return 2;
    }
    SuiteOptions so;
    so.jobs = jobs;
    so.build = build;
    const VerificationReport report = run_suite(suite, so);
    const std::string text = format == "json" ? report_to_json(report, timings) : report_to_text(report, timings);
    if (!emit(text, output, out, err)) return 2;
    return report.pass() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mckay
