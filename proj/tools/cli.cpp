// Copyright 2026 The chipfire Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "chipfire/divisor.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/independence.hpp"
#include "chipfire/io.hpp"
#include "chipfire/rank.hpp"

namespace chipfire::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string subcommand;
  std::optional<int> m;
  std::optional<int> n;
  bool toroidal = false;
  std::string graph_file;
  VertexId q = 0;
  std::string divisor_text;
  std::string set_text;
  int degree = 0;
  int max_k = 1;
  int theorem = 1;
  std::string mode = "formula";
  std::string format;
  bool enumerate = false;
  std::optional<std::uint64_t> max_compositions;
  SearchLimits limits;
};

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const CommandConfig& cfg) {
  if (!cfg.graph_file.empty()) {
    try {
      return graph_from_json(read_file(cfg.graph_file, "--graph"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--graph: ") + e.what());
    }
  }
  if (!cfg.m || !cfg.n) throw UsageError("--m and --n are required (or --graph FILE)");
  if (*cfg.m < 2) throw UsageError("--m must be at least 2, got " + std::to_string(*cfg.m));
  if (*cfg.n < 2) throw UsageError("--n must be at least 2, got " + std::to_string(*cfg.n));
  if (static_cast<long long>(*cfg.m) * *cfg.n > kMaxVertices) {
    throw UsageError("--m/--n: board exceeds " + std::to_string(kMaxVertices) + " cells");
  }
  return cfg.toroidal ? toroidal_queen_graph(*cfg.m, *cfg.n) : queen_graph(*cfg.m, *cfg.n);
}

Divisor load_divisor(const CommandConfig& cfg, const Graph& g) {
  if (cfg.divisor_text.empty()) throw UsageError("--divisor is required");
  Divisor d;
  try {
    d = cfg.divisor_text.front() == '@' ? parse_divisor(read_file(cfg.divisor_text.substr(1), "--divisor"))
                                        : parse_divisor(cfg.divisor_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--divisor: ") + e.what());
  }
  if (d.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw UsageError("--divisor: expected " + std::to_string(g.vertex_count()) + " entries, got " +
                     std::to_string(d.size()));
  }
  return d;
}

VertexId checked_q(const CommandConfig& cfg, const Graph& g) {
  if (!g.valid_vertex(cfg.q)) {
    throw UsageError("--q must lie in [0, " + std::to_string(g.vertex_count()) + "), got " + std::to_string(cfg.q));
  }
  return cfg.q;
}

void require_format(const CommandConfig& cfg, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed)
    if (cfg.format == f) return;
  throw UsageError("--format '" + cfg.format + "' is not supported by " + cfg.subcommand);
}

std::string join(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join(std::span<const VertexId> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

ordered_json divisor_json(const Divisor& d) {
  ordered_json j;
  j["values"] = d.values;
  return j;
}

ordered_json gonality_json(const GonalityReport& r) {
  ordered_json j;
  j["value"] = r.value;
  j["witness"] = divisor_json(r.witness);
  j["method"] = std::string(to_string(r.method));
  j["lower_bound"] = r.lower_bound;
  return j;
}

ordered_json correspondence_json(const CorrespondenceReport& r) {
  ordered_json j;
  j["degree"] = r.degree;
  j["mode"] = r.mode == CorrespondenceMode::Full ? "full" : "injective-only";
  auto reps = ordered_json::array();
  for (const auto& c : r.class_reps) reps.push_back(c.values);
  j["class_reps"] = std::move(reps);
  auto sets = ordered_json::array();
  for (const auto& s : r.mis_list) sets.push_back(s.vertices);
  j["mis_list"] = std::move(sets);
  auto images = ordered_json::array();
  for (const auto& img : r.images) images.push_back(img.values);
  j["images"] = std::move(images);
  j["injective"] = r.injective;
  j["images_positive_rank"] = r.images_positive_rank;
  j["surjective"] = r.surjective;
  j["matched"] = r.matched;
  return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << "\n"; }

int cmd_gen(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "dot"});
  const Graph g = load_graph(cfg);
  out << (cfg.format == "dot" ? graph_to_dot(g) : graph_to_json(g));
  return kOk;
}

int cmd_alpha(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  const Graph g = load_graph(cfg);
  const auto mis = max_independent_sets(g, cfg.limits);
  if (cfg.format == "text") {
    out << "alpha: " << mis.alpha << "\ncount: " << mis.sets.size() << "\n";
    if (cfg.enumerate)
      for (const auto& s : mis.sets) out << join(s.vertices) << "\n";
    return kOk;
  }
  ordered_json j;
  j["alpha"] = mis.alpha;
  j["count"] = mis.sets.size();
  if (cfg.enumerate) {
    auto sets = ordered_json::array();
    for (const auto& s : mis.sets) sets.push_back(s.vertices);
    j["sets"] = std::move(sets);
  }
  emit(out, j);
  return kOk;
}

int cmd_gonality(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json", "text"});
  const Graph g = load_graph(cfg);
  GonalityReport report;
  int status = kOk;
  if (cfg.mode == "bound") {
    report = gonality_upper_bound(g, cfg.limits);
  } else if (cfg.mode == "exact") {
    report = gonality_exact_small(g, cfg.limits);
  } else if (cfg.mode == "formula") {
    const auto& grid = g.grid();
    if (!grid) throw UsageError("--mode formula needs a board (--m/--n or a grid --graph)");
    report = gonality_upper_bound(g, cfg.limits);
    const int formula = grid->toroidal ? toroidal_gonality_formula(grid->m, grid->n)
                                       : queen_gonality_formula(grid->m, grid->n);
    if (formula != report.value) {
      err << "formula value " << formula << " disagrees with |V| - alpha = " << report.value << "\n";
      status = kCheckFailed;
    }
    report.value = formula;
    report.method = GonalityMethod::Formula;
  } else {
    throw UsageError("--mode must be formula, exact, or bound; got '" + cfg.mode + "'");
  }
  if (cfg.format == "text") {
    out << "value: " << report.value << "\nmethod: " << to_string(report.method)
        << "\nlower_bound: " << report.lower_bound << "\nwitness: " << join(report.witness.values) << "\n";
  } else {
    emit(out, gonality_json(report));
  }
  return status;
}

int cmd_rank(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  if (cfg.max_k < 0) throw UsageError("--max-k must be non-negative");
  const Graph g = load_graph(cfg);
  const Divisor d = load_divisor(cfg, g);
  const RankResult r = rank(g, d, cfg.max_k, cfg.limits);
  if (cfg.format == "text") {
    out << "rank: " << r.rank << "\nexact: " << (r.exact ? "true" : "false") << "\n";
    if (r.certificate) out << "certificate: " << join(r.certificate->values) << "\n";
  } else {
    ordered_json j;
    j["rank"] = r.rank;
    j["exact"] = r.exact;
    j["certificate"] = r.certificate ? divisor_json(*r.certificate) : ordered_json(nullptr);
    emit(out, j);
  }
  return r.rank < cfg.max_k ? kCheckFailed : kOk;
}

int cmd_reduce(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  const Graph g = load_graph(cfg);
  const Divisor d = load_divisor(cfg, g);
  const auto reduced = q_reduce(g, d, checked_q(cfg, g));
  if (cfg.format == "text") {
    out << join(reduced.divisor.values) << "\n";
    return kOk;
  }
  ordered_json j;
  j["values"] = reduced.divisor.values;
  j["q"] = cfg.q;
  j["script"] = reduced.script.fires;
  emit(out, j);
  return kOk;
}

int cmd_burn(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const Graph g = load_graph(cfg);
  const Divisor d = load_divisor(cfg, g);
  const VertexId q = checked_q(cfg, g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != q && d[v] < 0) throw UsageError("--divisor: vertex " + std::to_string(v) + " is in debt; burning needs d(v) >= 0 away from --q");
  }
  const auto report = dhar_burn(g, d, q);
  if (cfg.format == "json") {
    ordered_json j;
    j["burned_order"] = report.burned_order;
    j["unburned"] = report.unburned.to_vector();
    emit(out, j);
  } else {
    out << burn_trace_text(report);
  }
  return kOk;
}

std::vector<VertexId> parse_set(const std::string& text, const Graph& g) {
  std::vector<VertexId> out;
  if (text.empty()) return out;
  Divisor ids;
  try {
    ids = parse_divisor(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
  for (auto v : ids.values) {
    if (v < 0 || v >= g.vertex_count()) throw UsageError("--set: vertex " + std::to_string(v) + " out of range");
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

int cmd_fire(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  const Graph g = load_graph(cfg);
  const Divisor d = load_divisor(cfg, g);
  const VertexSet u(static_cast<std::size_t>(g.vertex_count()), parse_set(cfg.set_text, g));
  const bool legal = is_legal_firing(g, d, u);
  const Divisor fired = fire_set(g, d, u);
  if (cfg.format == "text") {
    out << join(fired.values) << "\nlegal: " << (legal ? "true" : "false") << "\n";
    return kOk;
  }
  ordered_json j;
  j["values"] = fired.values;
  j["legal"] = legal;
  emit(out, j);
  return kOk;
}

int cmd_classes(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  if (cfg.degree < 0) throw UsageError("--degree must be non-negative");
  const Graph g = load_graph(cfg);
  const auto classes = enumerate_positive_rank_classes(g, cfg.degree, cfg.limits);
  if (cfg.format == "text") {
    for (const auto& c : classes) out << join(c.values) << "\n";
    return kOk;
  }
  ordered_json j;
  j["degree"] = cfg.degree;
  j["count"] = classes.size();
  auto list = ordered_json::array();
  for (const auto& c : classes) list.push_back(c.values);
  j["classes"] = std::move(list);
  emit(out, j);
  return kOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  if (cfg.theorem != 1 && cfg.theorem != 2) throw UsageError("--theorem must be 1 or 2");
  CommandConfig board = cfg;
  board.toroidal = cfg.theorem == 2;
  board.graph_file.clear();
  const Graph g = load_graph(board);
  const int m = *cfg.m;
  const int n = *cfg.n;
  const int count = m * n;

  const auto mis = max_independent_sets(g, cfg.limits);
  const int alpha_formula = board.toroidal ? toroidal_alpha_formula(m, n) : queen_alpha_formula(m, n);
  const int gonality_formula = board.toroidal ? toroidal_gonality_formula(m, n) : queen_gonality_formula(m, n);
  const GonalityReport bound = gonality_upper_bound(g, cfg.limits);

  std::optional<GonalityReport> exact;
  if (exact_search_cost(g, bound.value) <= cfg.limits.max_compositions) exact = gonality_exact_small(g, cfg.limits);

  const bool full = composition_count(static_cast<std::uint64_t>(count), static_cast<std::uint64_t>(gonality_formula)) <=
                    cfg.limits.max_compositions;
  const auto correspondence = verify_correspondence(
      g, gonality_formula, full ? CorrespondenceMode::Full : CorrespondenceMode::InjectiveOnly, cfg.limits);

  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("alpha_matches_formula", mis.alpha == alpha_formula);
  checks.emplace_back("gonality_formula_is_mn_minus_alpha", gonality_formula == count - mis.alpha);
  checks.emplace_back("witness_positive_rank", has_positive_rank(g, bound.witness));
  if (exact) checks.emplace_back("exact_search_matches_formula", exact->value == gonality_formula);
  checks.emplace_back("correspondence_matched", correspondence.matched);
  bool passed = true;
  for (const auto& [name, ok] : checks) passed = passed && ok;

  if (cfg.format == "text") {
    out << (board.toroidal ? "TQ" : "Q") << "_{" << m << "," << n << "} theorem " << cfg.theorem << "\n";
    out << "alpha: " << mis.alpha << " (formula " << alpha_formula << ")\n";
    out << "gonality: " << gonality_formula << "\n";
    for (const auto& [name, ok] : checks) out << (ok ? "PASS " : "FAIL ") << name << "\n";
    return passed ? kOk : kCheckFailed;
  }
  ordered_json j;
  j["theorem"] = cfg.theorem;
  j["m"] = m;
  j["n"] = n;
  j["toroidal"] = board.toroidal;
  j["alpha"] = mis.alpha;
  j["alpha_formula"] = alpha_formula;
  j["gonality"] = gonality_formula;
  j["upper_bound"] = gonality_json(bound);
  j["exact"] = exact ? gonality_json(*exact) : ordered_json(nullptr);
  j["correspondence"] = correspondence_json(correspondence);
  j["matched"] = correspondence.matched;
  ordered_json check_json = ordered_json::object();
  for (const auto& [name, ok] : checks) check_json[name] = ok;
  j["checks"] = std::move(check_json);
  j["passed"] = passed;
  emit(out, j);
  return passed ? kOk : kCheckFailed;
}

std::uint64_t env_cap() {
  const char* raw = std::getenv("CHIPFIRE_MAX_COMPOSITIONS");
  if (raw == nullptr || *raw == '\0') return SearchLimits{}.max_compositions;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw UsageError(std::string("CHIPFIRE_MAX_COMPOSITIONS must be a positive integer, got '") + raw + "'");
  }
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Chip-firing on queen's graphs: divisors, reduction, rank, independence, gonality"};
  app.require_subcommand(1);

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "Board columns (m >= 2)");
    sub->add_option("--n", cfg.n, "Board rows (n >= 2)");
    sub->add_flag("--toroidal", cfg.toroidal, "Use the toroidal queen's graph");
    sub->add_option("--graph", cfg.graph_file, "Graph JSON as written by 'gen'");
  };
  auto add_common = [&](CLI::App* sub, std::string default_format) {
    sub->add_option("--format", cfg.format, "Output format")->default_str(default_format);
    sub->add_option("--max-compositions", cfg.max_compositions, "Composition cap per degree level");
    sub->add_option("--threads", cfg.limits.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->final_callback([&cfg, default_format] {
      if (cfg.format.empty()) cfg.format = default_format;
    });
  };
  auto add_divisor = [&](CLI::App* sub) {
    sub->add_option("--divisor", cfg.divisor_text, "Divisor as v0,v1,... or @file.json")->required();
  };

  auto* gen = app.add_subcommand("gen", "Write a board graph as JSON or DOT");
  add_graph(gen);
  add_common(gen, "json");

  auto* alpha = app.add_subcommand("alpha", "Independence number and maximum independent sets");
  add_graph(alpha);
  add_common(alpha, "json");
  alpha->add_flag("--enumerate", cfg.enumerate, "List every maximum independent set");

  auto* gonality = app.add_subcommand("gonality", "Gonality by formula, exact search, or upper bound");
  add_graph(gonality);
  add_common(gonality, "json");
  gonality->add_option("--mode", cfg.mode, "formula|exact|bound");

  auto* rank_cmd = app.add_subcommand("rank", "Divisor rank up to --max-k");
  add_graph(rank_cmd);
  add_common(rank_cmd, "json");
  add_divisor(rank_cmd);
  rank_cmd->add_option("--max-k", cfg.max_k, "Largest rank to certify");

  auto* reduce = app.add_subcommand("reduce", "q-reduced form of a divisor");
  add_graph(reduce);
  add_common(reduce, "json");
  add_divisor(reduce);
  reduce->add_option("--q", cfg.q, "Base vertex");

  auto* burn = app.add_subcommand("burn", "Dhar's burning trace from --q");
  add_graph(burn);
  add_common(burn, "text");
  add_divisor(burn);
  burn->add_option("--q", cfg.q, "Start vertex");

  auto* fire = app.add_subcommand("fire", "Fire a vertex set");
  add_graph(fire);
  add_common(fire, "json");
  add_divisor(fire);
  fire->add_option("--set", cfg.set_text, "Vertex ids to fire, comma separated");

  auto* classes = app.add_subcommand("classes", "Positive-rank divisor classes of a degree");
  add_graph(classes);
  add_common(classes, "json");
  classes->add_option("--degree", cfg.degree, "Divisor degree")->required();

  auto* verify = app.add_subcommand("verify", "Check the gonality theorem on one board");
  add_common(verify, "json");
  verify->add_option("--theorem", cfg.theorem, "1 = queen's graph, 2 = toroidal")->required();
  verify->add_option("--m", cfg.m, "Board columns")->required();
  verify->add_option("--n", cfg.n, "Board rows")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.limits.max_compositions = cfg.max_compositions ? *cfg.max_compositions : env_cap();
    if (cfg.limits.max_compositions == 0) throw UsageError("--max-compositions must be positive");
    const std::string& name = cfg.subcommand;
    if (name == "gen") return cmd_gen(cfg, out);
    if (name == "alpha") return cmd_alpha(cfg, out);
    if (name == "gonality") return cmd_gonality(cfg, out, err);
    if (name == "rank") return cmd_rank(cfg, out);
    if (name == "reduce") return cmd_reduce(cfg, out);
    if (name == "burn") return cmd_burn(cfg, out);
    if (name == "fire") return cmd_fire(cfg, out);
    if (name == "classes") return cmd_classes(cfg, out);
    if (name == "verify") return cmd_verify(cfg, out);
    throw UsageError("unknown subcommand " + name);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.cap_name() << " = " << e.cap_value() << " (needs " << e.requested()
        << ")\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace chipfire::cli
