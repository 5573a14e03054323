#include "tubix/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tubix/graph.hpp"
#include "tubix/off_export.hpp"
#include "tubix/realization.hpp"
#include "tubix/serialize.hpp"
#include "tubix/tubings.hpp"
#include "tubix/verify.hpp"

namespace tubix::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_path;
  bool use_stdin = false;
  std::string scheme = "power3";
  std::string format = "json";
  std::string output_path;
  int jobs = 1;
  std::string oracle_cap = "10000000";
  int max_n = kDefaultMaxNodes;

  // subcommand-specific
  std::optional<int> k;
  bool max_only = false;
  int survey_n = 0;
  bool connected_only = false;
  bool stop_on_fail = false;
  std::string family_kind;
  int family_n = 0;
  int weight_n = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::string read_input(const Options& o, std::istream& in) {
  if (!o.graph_path.empty() && o.use_stdin) throw UsageError("give either a graph file or --stdin, not both");
  if (!o.graph_path.empty()) return read_file(o.graph_path);
  std::string text(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) throw IoError("cannot read standard input");
  return text;
}

Graph load_graph(const Options& o, std::istream& in, bool enumerates = true) {
  Graph g = parse_graph(read_input(o, in));
  if (enumerates && g.n() > o.max_n)
    throw UsageError("graph has " + std::to_string(g.n()) + " nodes, above --max-n " + std::to_string(o.max_n));
  return g;
}

WeightScheme load_scheme(const Options& o, int n) {
  if (o.scheme.rfind("custom:", 0) == 0) return scheme_custom(read_file(o.scheme.substr(7)), n);
  if (o.scheme != "power3" && o.scheme != "loday") throw UsageError("unknown scheme '" + o.scheme + "'");
  // A single node is realized as the point (0).
  if (n == 1) return WeightScheme(o.scheme, {BigInt(0)});
  return o.scheme == "power3" ? scheme_power3(n) : scheme_loday(n);
}

SchemeFactory scheme_factory(const Options& o) {
  return [o](int n) { return load_scheme(o, n); };
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  try {
    v.oracle_cap = parse_bigint(o.oracle_cap);
  } catch (const std::invalid_argument&) {
    throw UsageError("--oracle-cap must be an integer");
  }
  v.jobs = o.jobs;
  return v;
}

std::string compact(const Json& j) { return j.dump(); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cmd_family(const Options& o) {
  auto kind = family_from_string(o.family_kind);
  if (!kind) throw UsageError("unknown family '" + o.family_kind + "' (path, cycle, complete, star, empty)");
  return dump_graph(generate_family(*kind, o.family_n)) + "\n";
}

std::string cmd_tubes(const Options& o, std::istream& in) {
  Graph g = load_graph(o, in);
  auto tubes = enumerate_tubes(g);
  std::ostringstream os;
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& t : tubes) j.push_back(tube_to_json(t));
    os << j.dump() << "\n";
  } else if (o.format == "csv") {
    os << "size,nodes\n";
    for (const auto& t : tubes) os << t.size() << "," << csv_quote(compact(tube_to_json(t))) << "\n";
  } else {
    for (const auto& t : tubes) os << compact(tube_to_json(t)) << "\n";
  }
  return os.str();
}

std::string cmd_tubings(const Options& o, std::istream& in) {
  Graph g = load_graph(o, in);
  if (o.k && o.max_only) throw UsageError("-k and --max-only are exclusive");
  std::vector<Tubing> tubings;
  if (o.max_only) {
    if (g.n() < 2) throw UsageError("maximal tubings need at least 2 nodes");
    tubings = enumerate_maximal_tubings(g);
  } else {
    tubings = enumerate_tubings(g, o.k);
  }
  std::ostringstream os;
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& u : tubings) j.push_back(tubing_to_json(u));
    os << j.dump() << "\n";
  } else if (o.format == "csv") {
    os << "k,tubing\n";
    for (const auto& u : tubings) os << u.size() << "," << csv_quote(compact(tubing_to_json(u))) << "\n";
  } else {
    for (const auto& u : tubings) os << compact(tubing_to_json(u)) << "\n";
  }
  return os.str();
}

std::string cmd_realize(const Options& o, std::istream& in) {
  Graph g = load_graph(o, in);
  WeightScheme s = load_scheme(o, g.n());
  auto vertices = realize(g, s);
  std::ostringstream os;
  if (o.format == "json") {
    os << vertices_to_json(s, g.n(), vertices).dump() << "\n";
  } else if (o.format == "csv") {
    os << "tubing";
    for (int i = 0; i < g.n(); ++i) os << ",x" << i;
    os << "\n";
    for (const auto& v : vertices) {
      os << csv_quote(compact(tubing_to_json(v.tubing)));
      for (const auto& x : v.point) os << "," << to_exact_string(x);
      os << "\n";
    }
  } else {
    for (const auto& v : vertices) {
      os << compact(tubing_to_json(v.tubing)) << " -> (";
      for (std::size_t i = 0; i < v.point.size(); ++i) os << (i ? "," : "") << to_exact_string(v.point[i]);
      os << ")\n";
    }
  }
  return os.str();
}

std::string sum_expr(NodeSet s) {
  std::string out;
  for (int v : s.members()) out += (out.empty() ? "" : " + ") + std::string("x") + std::to_string(v);
  return out;
}

std::string cmd_hrep(const Options& o, std::istream& in) {
  Graph g = load_graph(o, in);
  WeightScheme s = load_scheme(o, g.n());
  HRep h = build_hrep(g, s);
  std::ostringstream os;
  if (o.format == "json") {
    os << hrep_to_json(s, h).dump() << "\n";
  } else if (o.format == "csv") {
    os << "kind,support,rhs\n";
    os << "eq," << csv_quote(compact(tube_to_json(Tube(g.all_nodes())))) << "," << to_exact_string(h.total) << "\n";
    for (const auto& hs : h.halfspaces)
      os << "ge," << csv_quote(compact(tube_to_json(hs.tube))) << "," << to_exact_string(hs.rhs) << "\n";
  } else {
    os << sum_expr(g.all_nodes()) << " = " << to_exact_string(h.total) << "\n";
    for (const auto& hs : h.halfspaces) os << sum_expr(hs.support()) << " >= " << to_exact_string(hs.rhs) << "\n";
  }
  return os.str();
}

std::string cmd_fvector(const Options& o, std::istream& in) {
  Graph g = load_graph(o, in);
  auto fv = f_vector(g);
  std::ostringstream os;
  if (o.format == "json") {
    os << Json(fv).dump() << "\n";
  } else {
    const char* sep = o.format == "csv" ? "," : " ";
    for (std::size_t i = 0; i < fv.size(); ++i) os << (i ? sep : "") << fv[i];
    os << "\n";
  }
  return os.str();
}

std::string render_report(const Options& o, const VerificationReport& r) {
  std::ostringstream os;
  if (o.format == "json") {
    os << report_to_json(r).dump() << "\n";
  } else if (o.format == "csv") {
    os << "check,status\n";
    for (const auto& c : r.checks) os << c.name << "," << to_string(c.status) << "\n";
    os << "verdict," << (r.passed() ? "pass" : "fail") << "\n";
  } else {
    for (const auto& c : r.checks) {
      os << c.name << ": " << to_string(c.status);
      if (c.witness && c.status != CheckStatus::Pass) os << " " << c.witness->dump();
      os << "\n";
    }
    os << "verdict: " << (r.passed() ? "pass" : "fail") << "\n";
  }
  return os.str();
}

int report_exit_code(const VerificationReport& r) {
  if (!r.passed()) return kExitVerifyFailed;
  return r.complete() ? kExitOk : kExitIncomplete;
}

std::string cmd_verify(const Options& o, std::istream& in, int& code) {
  Graph g = load_graph(o, in);
  if (g.n() < 2) throw UsageError("verification needs at least 2 nodes");
  auto r = full_report(g, load_scheme(o, g.n()), verify_options(o));
  code = report_exit_code(r);
  return render_report(o, r);
}

std::string cmd_export_off(const Options& o, std::istream& in) {
  Graph g = load_graph(o, in);
  if (g.n() != 4) throw UsageError("export-off needs a 4-node graph");
  return write_off(build_off_mesh(g, load_scheme(o, g.n()), verify_options(o)));
}

std::string cmd_weight_check(const Options& o) {
  WeightScheme s = load_scheme(o, o.weight_n);
  auto r = check_weight_condition(s, o.weight_n);
  std::ostringstream os;
  if (o.format == "json") {
    os << weight_condition_to_json(r).dump() << "\n";
  } else {
    for (const auto& e : r.entries)
      os << "k=" << e.k << ": w(k)=" << e.weight << " > 2w(k-1)=" << e.twice_previous << " "
         << (e.holds ? "holds" : "FAILS") << "\n";
    os << (r.pass ? "pass" : "fail") << "\n";
  }
  return os.str();
}

std::string cmd_count(const Options& o, std::istream& in) {
  std::string text = read_input(o, in);
  std::size_t count = 0;
  Json doc = Json::parse(text, nullptr, false);
  if (!doc.is_discarded() && doc.is_array()) {
    count = doc.size();
  } else if (!doc.is_discarded() && doc.is_object() && doc.contains("vertices")) {
    count = doc["vertices"].size();
  } else {
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) ++count;
  }
  return std::to_string(count) + "\n";
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output_path.empty()) {
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write output");
    return;
  }
  std::ofstream f(o.output_path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + o.output_path + "' for writing");
  f << text;
  if (!f) throw IoError("cannot write '" + o.output_path + "'");
}

int cmd_survey(const Options& o, std::ostream& out) {
  if (o.survey_n < 2) throw UsageError("survey needs --n of at least 2");
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output_path.empty()) {
    file.open(o.output_path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + o.output_path + "' for writing");
    sink = &file;
  }
  if (o.format == "csv") *sink << "edges,verdict,failed_check\n";
  bool any_fail = false, any_skip = false;
  survey(o.survey_n, o.connected_only, scheme_factory(o), verify_options(o), o.jobs, o.stop_on_fail,
         [&](const SurveyEntry& e) {
           const CheckResult* bad = e.report.first_failure();
           any_fail = any_fail || bad != nullptr;
           any_skip = any_skip || !e.report.complete();
           const std::string verdict = e.report.passed() ? "pass" : "fail";
           if (o.format == "json") {
             Json line;
             line["graph"] = e.report.graph;
             line["scheme"] = e.report.scheme;
             line["verdict"] = verdict;
             if (bad) {
               line["failed_check"] = bad->name;
               if (bad->witness) line["witness"] = *bad->witness;
             }
             *sink << line.dump() << "\n";
           } else if (o.format == "csv") {
             *sink << csv_quote(compact(e.report.graph["edges"])) << "," << verdict << "," << (bad ? bad->name : "")
                   << "\n";
           } else {
             *sink << compact(e.report.graph["edges"]) << " " << verdict;
             if (bad) *sink << " " << bad->name << (bad->witness ? " " + bad->witness->dump() : "");
             *sink << "\n";
           }
           sink->flush();
         });
  if (!*sink) throw IoError("cannot write output");
  if (any_fail) return kExitVerifyFailed;
  return any_skip ? kExitIncomplete : kExitOk;
}

void add_graph_options(CLI::App* sub, Options& o, bool with_scheme) {
  sub->add_option("graph", o.graph_path, "Graph JSON file (default: standard input)");
  sub->add_flag("--stdin", o.use_stdin, "Read the graph from standard input");
  if (with_scheme) sub->add_option("--scheme", o.scheme, "power3 | loday | custom:FILE");
  sub->add_option("--max-n", o.max_n, "Largest graph accepted for enumeration")->check(CLI::PositiveNumber);
}

void add_common_options(CLI::App* sub, Options& o) {
  sub->add_option("--output", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("-o", o.output_path, "Write to FILE instead of standard output");
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--oracle-cap", o.oracle_cap, "Largest number of candidate bases for the vertex oracle");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graph-associahedra: tubings, integer realizations and exact verification", "tubix"};
  app.require_subcommand(1, 1);

  auto* family = app.add_subcommand("family", "Print a family graph (path, cycle, complete, star, empty)");
  family->add_option("kind", o.family_kind)->required();
  family->add_option("n", o.family_n)->required();
  add_common_options(family, o);

  auto* tubes = app.add_subcommand("tubes", "List the tubes of a graph");
  add_graph_options(tubes, o, false);
  add_common_options(tubes, o);

  auto* tubings = app.add_subcommand("tubings", "List tubings");
  add_graph_options(tubings, o, false);
  add_common_options(tubings, o);
  tubings->add_option("-k", o.k, "Only tubings with K tubes");
  tubings->add_flag("--max-only", o.max_only, "Only maximal tubings");

  auto* realize_cmd = app.add_subcommand("realize", "Vertex coordinates of every maximal tubing");
  add_graph_options(realize_cmd, o, true);
  add_common_options(realize_cmd, o);

  auto* hrep = app.add_subcommand("hrep", "Halfspace description");
  add_graph_options(hrep, o, true);
  add_common_options(hrep, o);

  auto* fvector = app.add_subcommand("fvector", "Number of k-tubings for k = 1..n-1");
  add_graph_options(fvector, o, false);
  add_common_options(fvector, o);

  auto* verify_cmd = app.add_subcommand("verify", "Certify that vertices and halfspaces describe P(G)");
  add_graph_options(verify_cmd, o, true);
  add_common_options(verify_cmd, o);

  auto* survey_cmd = app.add_subcommand("survey", "Verify every graph on N labeled nodes (JSON lines)");
  survey_cmd->add_option("--n", o.survey_n, "Number of nodes")->required();
  survey_cmd->add_flag("--connected-only", o.connected_only, "Skip disconnected graphs");
  survey_cmd->add_flag("--stop-on-fail", o.stop_on_fail, "Stop after the first failing graph");
  survey_cmd->add_option("--scheme", o.scheme, "power3 | loday | custom:FILE");
  add_common_options(survey_cmd, o);

  auto* export_off = app.add_subcommand("export-off", "OFF mesh of a verified 3-dimensional P(G)");
  add_graph_options(export_off, o, true);
  add_common_options(export_off, o);

  auto* weights = app.add_subcommand("weight-check", "Check w(k) > 2 w(k-1) for k = 3..N");
  weights->add_option("--n", o.weight_n, "Largest tube size")->required();
  weights->add_option("--scheme", o.scheme, "power3 | loday | custom:FILE");
  add_common_options(weights, o);

  auto* count = app.add_subcommand("count", "Count entries of a JSON array, vertex list, or lines");
  count->add_option("input", o.graph_path, "File (default: standard input)");
  add_common_options(count, o);

  std::vector<std::string> argv_store{"tubix"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    int code = kExitOk;
    std::string text;
    if (family->parsed()) text = cmd_family(o);
    else if (tubes->parsed()) text = cmd_tubes(o, in);
    else if (tubings->parsed()) text = cmd_tubings(o, in);
    else if (realize_cmd->parsed()) text = cmd_realize(o, in);
    else if (hrep->parsed()) text = cmd_hrep(o, in);
    else if (fvector->parsed()) text = cmd_fvector(o, in);
    else if (verify_cmd->parsed()) text = cmd_verify(o, in, code);
    else if (export_off->parsed()) text = cmd_export_off(o, in);
    else if (weights->parsed()) text = cmd_weight_check(o);
    else if (count->parsed()) text = cmd_count(o, in);
    else if (survey_cmd->parsed()) return cmd_survey(o, out);
    emit(o, text, out);
    return code;
  } catch (const UsageError& e) {
    err << "tubix: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "tubix: " << e.what() << "\n";
    return kExitIoError;
  } catch (const ExportError& e) {
    err << "tubix: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const GraphError& e) {
    err << "tubix: invalid graph: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    err << "tubix: " << e.what() << "\n";
    return kExitDataError;
  } catch (const SolverError& e) {
    err << "tubix: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace tubix::cli
