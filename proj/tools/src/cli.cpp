#include "clkeys_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "clkeys/keys.hpp"

namespace clkeys::cli {

namespace {

using io::Json;

struct GlobalOptions {
  std::string format = "json";
  std::size_t limit_n = kDefaultEnumerationLimit;
  std::uint64_t seed = 0;
  bool no_timings = false;
};

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Outcome {
  Json result = Json::object();
  Json stats = Json::object();
  Json warnings = Json::array();
  Json timings = Json::object();
  std::optional<Universe> universe;
  std::string artifact;
  int exit_code = kExitOk;
};

Json read_input(const std::string& path, std::istream& in) {
  if (path == "-") return io::read_json(in);
  std::ifstream file(path);
  if (!file) throw io::ParseError("cannot open '" + path + "'");
  return io::read_json(file);
}

Json fail_witness_or_null(const std::optional<AttrSet>& s) {
  return s ? io::set_to_json(*s) : Json(nullptr);
}

Json transversal_stats_json(const Universe& u, const TransversalStats& stats) {
  Json steps = Json::array();
  for (const auto& s : stats.steps) {
    Json step;
    step["q"] = s.q;
    step["edge"] = io::set_to_json(u.from_mask(s.edge));
    step["l"] = s.level_size;
    step["t"] = s.disjoint;
    step["s"] = s.meeting;
    step["u"] = s.cost_factor;
    step["generated"] = s.candidates_generated;
    step["kept"] = s.candidates_kept;
    step["l_next"] = s.next_level_size;
    steps.push_back(std::move(step));
  }
  Json out;
  out["edges_input"] = stats.edges_input;
  out["edges_processed"] = stats.edges_processed;
  out["empty_edge"] = stats.empty_edge;
  out["steps"] = std::move(steps);
  return out;
}

std::vector<std::size_t> parse_order(const Universe& u, const std::string& text) {
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    order.push_back(u.require_index(name));
  }
  return order;
}

// commands

struct KeysOptions {
  std::string input = "-";
  bool one = false;
  std::string order;
  bool oracle = false;
};

Outcome cmd_keys(const GlobalOptions& g, const KeysOptions& o, std::istream& in) {
  Outcome out;
  Stopwatch clock;
  const ClosureOperation f = io::parse_closure(read_input(o.input, in));
  out.universe = f.universe();
  out.timings["parse"] = clock.lap_ms();

  if (o.one) {
    out.artifact = "min_key";
    std::vector<std::size_t> order;
    if (o.order.empty()) {
      for (std::size_t i = 0; i < f.universe().size(); ++i) order.push_back(i);
    } else {
      order = parse_order(f.universe(), o.order);
    }
    const AttrSet key = extract_min_key(f, order);
    Json names = Json::array();
    for (auto i : order) names.push_back(f.universe().name(i));
    out.result["order"] = std::move(names);
    out.result["min_key"] = io::set_to_json(key);
    out.stats["evaluations"] = f.universe().size() + 1;
    out.timings["compute"] = clock.lap_ms();
    return out;
  }

  out.artifact = "min_keys";
  const KeyReport report = full_report(f, g.limit_n);
  out.result["min_keys"] = io::family_to_json(report.min_keys);
  out.result["minimal_independent"] = io::family_to_json(report.minimal_independent);
  out.stats["closed_sets"] = report.closed.size();
  out.stats["independent_sets"] = report.independent.size();
  out.stats["transversal"] =
      transversal_stats_json(f.universe(), report.transversal_stats);
  out.timings["compute"] = clock.lap_ms();

  if (o.oracle) {
    const SetFamily brute = brute_force_min_keys(f);
    const bool agrees = brute == report.min_keys;
    out.result["oracle"] = {{"brute_force", io::family_to_json(brute)},
                            {"agrees", agrees}};
    out.timings["oracle"] = clock.lap_ms();
    if (!agrees) out.exit_code = kExitCheckFailed;
  }
  return out;
}

struct AntikeysOptions {
  std::string input = "-";
  bool oracle = false;
};

Outcome cmd_antikeys(const GlobalOptions& g, const AntikeysOptions& o,
                     std::istream& in) {
  Outcome out;
  out.artifact = "antikeys";
  Stopwatch clock;
  const ClosureOperation f = io::parse_closure(read_input(o.input, in));
  out.universe = f.universe();
  out.timings["parse"] = clock.lap_ms();

  const KeyReport report = full_report(f, g.limit_n);
  out.result["antikeys"] = io::family_to_json(report.antikeys);
  out.result["minimal_independent"] = io::family_to_json(report.minimal_independent);
  out.stats["closed_sets"] = report.closed.size();
  out.stats["independent_sets"] = report.independent.size();
  out.timings["compute"] = clock.lap_ms();

  if (o.oracle) {
    const SetFamily brute = brute_force_antikeys(f);
    const bool agrees = brute == report.antikeys;
    out.result["oracle"] = {{"brute_force", io::family_to_json(brute)},
                            {"agrees", agrees}};
    out.timings["oracle"] = clock.lap_ms();
    if (!agrees) out.exit_code = kExitCheckFailed;
  }
  return out;
}

struct TransversalOptionsCli {
  std::string input = "-";
  bool oracle = false;
};

Outcome cmd_transversal(const GlobalOptions& g, const TransversalOptionsCli& o,
                        std::istream& in) {
  Outcome out;
  out.artifact = "transversals";
  Stopwatch clock;
  const Hypergraph h = io::parse_hypergraph(read_input(o.input, in));
  out.universe = h.vertices();
  out.timings["parse"] = clock.lap_ms();

  const TransversalResult res = min_transversals(h);
  out.result["transversals"] = io::family_to_json(res.transversals);
  out.stats["transversal"] = transversal_stats_json(h.vertices(), res.stats);
  out.timings["compute"] = clock.lap_ms();

  if (o.oracle) {
    const SetFamily brute = brute_force_transversals(h);
    std::vector<Mask> shuffled(h.edge_sequence().begin(), h.edge_sequence().end());
    std::mt19937_64 rng(g.seed);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const SetFamily reordered =
        min_transversals(Hypergraph(h.vertices(), std::move(shuffled))).transversals;
    const bool agrees = brute == res.transversals;
    const bool order_agrees = reordered == res.transversals;
    out.result["oracle"] = {{"brute_force", io::family_to_json(brute)},
                            {"agrees", agrees},
                            {"seed", g.seed},
                            {"shuffled_order_agrees", order_agrees}};
    out.timings["oracle"] = clock.lap_ms();
    if (!agrees || !order_agrees) out.exit_code = kExitCheckFailed;
  }
  return out;
}

Json system_report_json(const SystemReport& r) {
  Json s1 = {{"name", "S1"}, {"holds", r.contains_universe}};
  Json s2 = {{"name", "S2"}, {"holds", !r.missing_intersection.has_value()}};
  if (r.missing_intersection) {
    const auto& [a, b] = *r.missing_intersection;
    s2["witness"] = {{"left", io::set_to_json(a)},
                     {"right", io::set_to_json(b)},
                     {"missing_intersection", io::set_to_json(a & b)}};
    s2["violations"] = r.missing_count;
  }
  return Json::array({std::move(s1), std::move(s2)});
}

Json axiom_report_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (Axiom a : {Axiom::Extensive, Axiom::Monotone, Axiom::Idempotent}) {
    Json c = {{"name", axiom_label(a)}, {"holds", !r.violates(a)}};
    for (const auto& v : r.violations) {
      if (v.axiom != a) continue;
      Json w;
      w["x"] = io::set_to_json(v.x);
      w["f_x"] = io::set_to_json(v.fx);
      if (a == Axiom::Monotone) {
        w["y"] = io::set_to_json(*v.y);
        w["f_y"] = io::set_to_json(*v.fy);
      } else if (a == Axiom::Idempotent) {
        w["f_f_x"] = io::set_to_json(*v.fy);
      }
      c["witness"] = std::move(w);
      c["violations"] = v.occurrences;
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

struct CheckOptions {
  std::string input = "-";
};

Outcome cmd_check(const GlobalOptions&, const CheckOptions& o, std::istream& in) {
  Outcome out;
  Stopwatch clock;
  const Json doc = read_input(o.input, in);

  auto check_system = [&](const Universe& u, const Json& sets) {
    out.artifact = "closure_system_check";
    const SetFamily family = io::parse_family(u, sets);
    out.timings["parse"] = clock.lap_ms();
    const SystemReport r = validate_system(family);
    out.result["kind"] = "closure_system";
    out.result["valid"] = r.valid();
    out.result["checks"] = system_report_json(r);
    out.stats["closed_sets"] = family.size();
    if (!r.valid()) out.exit_code = kExitCheckFailed;
  };
  auto check_axioms = [&](const ClosureOperation& f, const char* kind) {
    out.artifact = "closure_axiom_check";
    out.timings["parse"] = clock.lap_ms();
    const AxiomReport r = verify_axioms(f);
    out.result["kind"] = kind;
    out.result["representation"] = f.kind_name();
    out.result["valid"] = r.ok();
    out.result["checks"] = axiom_report_json(r);
    out.stats["sets_checked"] = r.sets_checked;
    out.stats["pairs_checked"] = r.pairs_checked;
    if (!r.ok()) out.exit_code = kExitCheckFailed;
  };

  if (doc.is_object() && doc.contains("closure")) {
    const Json& spec = doc["closure"];
    if (spec.is_object() && spec.value("type", "") == "system") {
      const Universe u = io::parse_universe(doc.at("universe"));
      out.universe = u;
      if (!spec.contains("closed_sets")) {
        throw io::ParseError("missing field 'closed_sets'");
      }
      check_system(u, spec["closed_sets"]);
    } else {
      const ClosureOperation f = io::parse_closure(doc);
      out.universe = f.universe();
      check_axioms(f, "closure_operation");
    }
  } else if (doc.is_object() && doc.contains("universe") &&
             doc.contains("closed_sets")) {
    const Universe u = io::parse_universe(doc["universe"]);
    out.universe = u;
    check_system(u, doc["closed_sets"]);
  } else if (doc.is_object() && doc.contains("vertices")) {
    const Graph graph = io::parse_graph(doc);
    out.universe = graph.vertices();
    check_axioms(graph_to_closure(graph), "graph_reduction");
  } else {
    throw io::ParseError(
        "expected a closure document, a closure system or a graph");
  }
  out.timings["compute"] = clock.lap_ms();
  return out;
}

struct ReduceOptions {
  std::string input = "-";
  std::string output;
  bool verify = false;
};

Outcome cmd_reduce(const GlobalOptions& g, const ReduceOptions& o,
                   std::istream& in) {
  Outcome out;
  out.artifact = "closure";
  Stopwatch clock;
  const Graph graph = io::parse_graph(read_input(o.input, in));
  out.universe = graph.vertices();
  out.timings["parse"] = clock.lap_ms();

  const ClosureOperation f = graph_to_closure(graph);
  const Json closure = io::closure_to_json(f);
  out.result["edges"] = io::family_to_json(graph.edge_family());
  out.result["closure"] = closure;
  out.stats["rules"] = graph.edges().size();
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) throw io::ParseError("cannot write '" + o.output + "'");
    file << closure.dump(2) << '\n';
  }

  if (graph.edges().empty()) {
    out.warnings.push_back(
        "graph has no edges: the induced closure is the identity map, whose "
        "only minimal key is the whole vertex set");
    if (o.verify) out.warnings.push_back("verification skipped for edgeless graph");
  } else if (o.verify) {
    const AxiomReport axioms = verify_axioms(f);
    const SetFamily keys = min_keys(f, g.limit_n);
    const bool keys_match = keys == graph.edge_family();
    out.result["verification"] = {{"axioms_hold", axioms.ok()},
                                  {"min_keys", io::family_to_json(keys)},
                                  {"keys_equal_edges", keys_match}};
    if (!axioms.ok() || !keys_match) out.exit_code = kExitCheckFailed;
  }
  out.timings["compute"] = clock.lap_ms();
  return out;
}

struct NonkeyOptions {
  std::string input = "-";
  long long k = 0;
  bool oracle = false;
};

Outcome cmd_nonkey(const GlobalOptions& g, const NonkeyOptions& o,
                   std::istream& in) {
  Outcome out;
  out.artifact = "nonkey";
  Stopwatch clock;
  const ClosureOperation f = io::parse_closure(read_input(o.input, in));
  out.universe = f.universe();
  out.timings["parse"] = clock.lap_ms();
  if (o.k < 0) throw InvalidInput("k must be non-negative");
  const auto k = static_cast<std::size_t>(o.k);

  const NonkeyAnswer answer = nonkey_decision(f, k, g.limit_n);
  out.result["k"] = k;
  out.result["exists"] = answer.exists;
  out.result["witness"] = fail_witness_or_null(answer.witness);
  out.timings["compute"] = clock.lap_ms();

  if (o.oracle) {
    const NonkeyAnswer brute = brute_force_nonkey_decision(f, k);
    const bool agrees = brute.exists == answer.exists;
    out.result["oracle"] = {{"exists", brute.exists},
                            {"witness", fail_witness_or_null(brute.witness)},
                            {"agrees", agrees}};
    out.timings["oracle"] = clock.lap_ms();
    if (!agrees) out.exit_code = kExitCheckFailed;
  }
  return out;
}

Json assemble(const std::string& command, Outcome& o, bool timings) {
  Json doc;
  doc["command"] = command;
  doc["artifact"] = o.artifact;
  doc["universe"] = o.universe ? Json(o.universe->names()) : Json::array();
  doc["result"] = std::move(o.result);
  doc["stats"] = std::move(o.stats);
  doc["warnings"] = std::move(o.warnings);
  if (timings) doc["timings_ms"] = std::move(o.timings);
  return doc;
}

// text rendering

bool is_name_array(const Json& v) {
  return v.is_array() &&
         std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); });
}

bool is_family_array(const Json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Json& e) { return is_name_array(e); });
}

std::string braces(const Json& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ',';
    s += names[i].get<std::string>();
  }
  return s + "}";
}

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (is_family_array(v)) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += braces(v[i]);
    }
    return s + "}";
  }
  if (is_name_array(v)) return braces(v);
  return v.dump();
}

void render_value(std::ostream& os, const std::string& key, const Json& v,
                  int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object() && v.empty()) {
    os << pad << key << ": -\n";
    return;
  }
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, child] : v.items()) render_value(os, k, child, depth + 1);
    return;
  }
  if (v.is_array() && !v.empty() && v.front().is_object()) {
    os << pad << key << ":\n";
    for (const auto& item : v) {
      os << pad << "  -";
      for (const auto& [k, child] : item.items()) {
        os << ' ' << k << '=' << scalar_text(child);
      }
      os << '\n';
    }
    return;
  }
  os << pad << key << ": " << scalar_text(v) << '\n';
}

}  // namespace

io::Json canonical_section(const io::Json& document) {
  io::Json copy = document;
  copy.erase("timings_ms");
  return copy;
}

std::string render_text(const io::Json& document) {
  std::ostringstream os;
  for (const auto& [key, value] : document.items()) {
    if (key == "warnings" && value.is_array()) {
      for (const auto& w : value) os << "warning: " << w.get<std::string>() << '\n';
      continue;
    }
    render_value(os, key, value, 0);
  }
  return os.str();
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Closure operations, minimal keys, antikeys and hypergraph "
               "transversals"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output rendering")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--limit-n", global.limit_n,
                 "Cap on universe size for exhaustive enumeration");
  app.add_option("--seed", global.seed, "Seed for randomized checks");
  app.add_flag("--no-timings", global.no_timings, "Omit the timings block");

  KeysOptions keys;
  auto* keys_cmd = app.add_subcommand("keys", "All minimal keys of a closure");
  keys_cmd->add_option("file", keys.input, "Closure JSON ('-' for stdin)");
  keys_cmd->add_flag("--one", keys.one, "Extract a single minimal key");
  keys_cmd->add_option("--order", keys.order,
                       "Comma-separated removal order for --one");
  keys_cmd->add_flag("--oracle", keys.oracle, "Cross-check by brute force");

  AntikeysOptions anti;
  auto* anti_cmd = app.add_subcommand("antikeys", "All antikeys of a closure");
  anti_cmd->add_option("file", anti.input, "Closure JSON ('-' for stdin)");
  anti_cmd->add_flag("--oracle", anti.oracle, "Cross-check by brute force");

  TransversalOptionsCli trans;
  auto* trans_cmd =
      app.add_subcommand("transversal", "Minimal transversals of a hypergraph");
  trans_cmd->add_option("file", trans.input, "Hypergraph JSON ('-' for stdin)");
  trans_cmd->add_flag("--oracle", trans.oracle,
                      "Cross-check by brute force and a seeded edge shuffle");

  CheckOptions check;
  auto* check_cmd =
      app.add_subcommand("check", "Check closure axioms or closure-system laws");
  check_cmd->add_option("file", check.input, "Closure, system or graph JSON");

  ReduceOptions reduce;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Encode a graph as a closure operation");
  reduce_cmd->add_option("file", reduce.input, "Graph JSON ('-' for stdin)");
  reduce_cmd->add_option("-o,--output", reduce.output,
                         "Also write the closure JSON to this file");
  reduce_cmd->add_flag("--verify", reduce.verify,
                       "Check the axioms and that the minimal keys are the edges");

  NonkeyOptions nonkey;
  auto* nonkey_cmd =
      app.add_subcommand("nonkey", "Is there a nonkey with at least k elements?");
  nonkey_cmd->add_option("file", nonkey.input, "Closure JSON ('-' for stdin)")
      ->required();
  nonkey_cmd->add_option("k", nonkey.k, "Cardinality bound")->required();
  nonkey_cmd->add_flag("--oracle", nonkey.oracle, "Cross-check by brute force");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome outcome;
  try {
    if (command == "keys") {
      outcome = cmd_keys(global, keys, in);
    } else if (command == "antikeys") {
      outcome = cmd_antikeys(global, anti, in);
    } else if (command == "transversal") {
      outcome = cmd_transversal(global, trans, in);
    } else if (command == "check") {
      outcome = cmd_check(global, check, in);
    } else if (command == "reduce") {
      outcome = cmd_reduce(global, reduce, in);
    } else {
      outcome = cmd_nonkey(global, nonkey, in);
    }
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  const Json doc = assemble(command, outcome, !global.no_timings);
  if (global.format == "text") {
    out << render_text(doc);
  } else {
    out << doc.dump(2) << '\n';
  }
  return outcome.exit_code;
}

}  // namespace clkeys::cli
