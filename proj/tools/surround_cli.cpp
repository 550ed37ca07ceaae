// surround: build graph families, solve surrounding games, reproduce tables,
// simulate strategies and play in the terminal.
//
// Exit codes: 0 decided/pass, 1 usage or input error, 2 budget exhausted or
// indeterminate, 3 a checked value or strategy assertion failed.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "batteries.hpp"
#include "json.hpp"
#include "play.hpp"
#include "surround/bounds.hpp"
#include "surround/io.hpp"
#include "surround/scripted.hpp"

namespace fs = std::filesystem;
using namespace surround;
using surround::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kAssert = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::size_t workers = 1;
  std::uint64_t budget = 200'000'000;
  std::uint64_t seed = 0;
  std::string out;
  bool quiet = false;
};

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

SolveOptions solve_options(const Globals& g) { return {g.budget, std::max<std::size_t>(1, g.workers)}; }

// RunReport envelope shared by all subcommands.
json run_report(const std::string& command, const CLI::App& app, json results, double seconds) {
  std::string effective = app.config_to_str(true, false);
  return {{"command", command},     {"config", effective},  {"config_hash", fnv1a(effective)},
          {"results", results},     {"wall_seconds", seconds}, {"version", kVersion}};
}

void emit(const Globals& g, const json& report) {
  if (!g.out.empty()) write_text_file(g.out, report.dump(2) + "\n");
  if (!g.quiet || g.out.empty()) std::cout << report.dump(2) << "\n";
}

std::size_t to_size(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw UsageError(what + ": expected a natural number, got '" + s + "'");
  return static_cast<std::size_t>(std::stoul(s));
}

Variant variant_arg(const std::string& s) {
  try {
    return parse_variant(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

AnnotatedGraph load_graph(const std::string& path) {
  try {
    return load_annotated(path);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void require_connected(const Graph& g, const std::string& what) {
  if (!is_connected(g)) throw UsageError(what + ": graph is not connected (connected graphs only)");
}

// ---------------------------------------------------------------------------
// gen

AnnotatedGraph make_family(const std::vector<std::string>& a, std::size_t& i) {
  if (i >= a.size()) throw UsageError("gen: missing family name");
  const std::string fam = a[i++];
  auto nat = [&](const std::string& what) {
    if (i >= a.size()) throw UsageError("gen " + fam + ": missing " + what);
    return to_size(a[i++], fam + " " + what);
  };
  auto edges_graph = [](std::size_t n, std::vector<std::pair<Vertex, Vertex>> e, std::string name) {
    return plain_graph(Graph::build(n, e), std::move(name));
  };
  if (fam == "k-bipartite") {
    auto x = nat("a");
    auto y = nat("b");
    return complete_bipartite(x, y);
  }
  if (fam == "complete" || fam == "cycle" || fam == "path" || fam == "star") {
    auto n = nat("n");
    std::vector<std::pair<Vertex, Vertex>> e;
    if (fam == "complete")
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    if (fam == "cycle" || fam == "path")
      for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    if (fam == "cycle") {
      if (n < 3) throw UsageError("gen cycle: n >= 3");
      e.emplace_back(static_cast<Vertex>(n - 1), 0);
    }
    if (fam == "star") {
      for (Vertex v = 1; v <= n; ++v) e.emplace_back(0, v);
      ++n;
    }
    return edges_graph(n, e, fam);
  }
  if (fam == "leafy") {
    auto l = nat("leaves");
    auto host = make_family(a, i);
    return attach_leaves(host, l);
  }
  if (fam == "mols-graph") return mols_graph(nat("k"));
  if (fam == "line-complete") return line_complete(nat("n"));
  if (fam == "base") return base_graph(nat("s"));
  if (fam == "expanded") {
    auto s = nat("s");
    auto l = nat("l");
    return expanded_graph(s, l);
  }
  if (fam == "hslm") {
    auto s = nat("s");
    auto l = nat("l");
    auto m = nat("m");
    return full_construction(s, l, m);
  }
  throw UsageError("gen: unknown family '" + fam +
                   "' (k-bipartite, complete, cycle, path, star, leafy, mols-graph, line-complete, base, expanded, hslm)");
}

int cmd_gen(const CLI::App& app, const Globals& g, const std::vector<std::string>& args, const std::string& file) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t i = 0;
  AnnotatedGraph ag;
  try {
    ag = make_family(args, i);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("gen: ") + e.what());
  }
  if (i != args.size()) throw UsageError("gen: unexpected extra argument '" + args[i] + "'");
  auto j = annotated_to_json(ag);
  if (file.empty())
    std::cout << j.dump() << "\n";
  else
    write_text_file(file, j.dump() + "\n");
  if (!file.empty() && !g.quiet) {
    json res{{"family", ag.family}, {"n", ag.graph.order()}, {"m", ag.graph.size()}, {"file", file}};
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << run_report("gen", app, res, secs).dump(2) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// solve

json stats_json(const SolveStats& s) {
  return {{"states", s.states}, {"transitions", s.transitions}, {"plies", s.plies}, {"seconds", s.seconds}};
}

int cmd_solve(const CLI::App& app, const Globals& g, const std::string& graph_file, const std::string& vname,
              std::size_t k, bool trust, std::size_t max_k) {
  auto t0 = std::chrono::steady_clock::now();
  auto ag = load_graph(graph_file);
  require_connected(ag.graph, graph_file);
  const Variant v = variant_arg(vname);
  auto lb = lower_bounds(ag.graph);
  json res{{"graph", graph_file},
           {"variant", variant_name(v)},
           {"lower_bounds", {{"delta", lb.delta}, {"Delta", lb.Delta}, {"degeneracy", lb.degeneracy}}}};
  int code = kOk;
  if (k > 0) {
    try {
      auto r = solve_fixed_k(GameSpec(ag.graph, v, k), solve_options(g));
      res["k"] = k;
      res["verdict"] = verdict_name(r.verdict);
      if (r.verdict == Verdict::CopWin) res["placement"] = r.placement;
      res["stats"] = stats_json(r.stats);
    } catch (const BudgetExceeded& e) {
      res["k"] = k;
      res["verdict"] = "budget";
      res["error"] = e.what();
      code = kBudget;
    }
  } else {
    CopNumberOptions co;
    co.solve = solve_options(g);
    co.trust_bounds = trust;
    co.max_k = max_k;
    auto rep = cop_number(ag.graph, v, co, graph_file);
    res["k_star"] = rep.k_star ? json(*rep.k_star) : json();
    res["start_k"] = rep.start_k;
    res["bracket"] = {rep.lower, rep.upper ? json(rep.upper) : json()};
    res["verdicts"] = verdicts_to_json(rep);
    SolveStats total;
    for (const auto& kv : rep.verdicts) {
      total.states += kv.stats.states;
      total.transitions += kv.stats.transitions;
      total.seconds += kv.stats.seconds;
    }
    res["stats"] = stats_json(total);
    if (!rep.k_star) code = kBudget;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(g, run_report("solve", app, res, secs));
  return code;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const CLI::App& app, const Globals& g, const std::vector<std::string>& names, const cli::BatteryParams& p) {
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& n : names)
    if (std::find(cli::battery_names().begin(), cli::battery_names().end(), n) == cli::battery_names().end())
      throw UsageError("table: unknown battery '" + n + "'");
  cli::BatteryRunner run(solve_options(g), [&](const cli::Row& r) {
    if (!g.quiet)
      std::cerr << std::left << std::setw(14) << cli::status_name(r.status) << std::setw(22) << r.graph << std::setw(18)
                << r.quantity << " expected " << r.expected << ", computed " << r.computed << "\n";
  });
  json tables = json::object();
  for (const auto& n : names) {
    std::size_t first = run.rows.size();
    try {
      cli::run_battery(n, p, run);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("table: ") + e.what());
    }
    json rows = json::array();
    for (std::size_t i = first; i < run.rows.size(); ++i) rows.push_back(cli::row_to_json(run.rows[i]));
    tables[n] = rows;
  }
  int code = kOk;
  std::size_t pass = 0, fail = 0, indet = 0, finding = 0;
  for (const auto& r : run.rows) {
    pass += r.status == cli::RowStatus::Pass;
    fail += r.status == cli::RowStatus::Fail;
    indet += r.status == cli::RowStatus::Indeterminate;
    finding += r.status == cli::RowStatus::Finding;
  }
  if (indet) code = kBudget;
  if (fail) code = kAssert;
  json res{{"tables", tables}, {"pass", pass}, {"fail", fail}, {"indeterminate", indet}, {"findings", finding}};
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(g, run_report("table", app, res, secs));
  return code;
}

// ---------------------------------------------------------------------------
// simulate and play

struct SideSpec {
  std::string kind;  // scripted, adversary, solver
  std::string arg;
};

SideSpec parse_side(const std::string& s, const std::string& what) {
  if (s == "solver") return {"solver", ""};
  auto c = s.find(':');
  if (c != std::string::npos) {
    auto kind = s.substr(0, c);
    if (kind == "scripted" || kind == "adversary") return {kind, s.substr(c + 1)};
  }
  throw UsageError(what + ": expected scripted:KEY, adversary:KIND or solver, got '" + s + "'");
}

std::pair<std::uint64_t, std::uint64_t> parse_seeds(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto x = to_size(s, "--seeds");
    return {x, x};
  }
  auto a = to_size(s.substr(0, dots), "--seeds"), b = to_size(s.substr(dots + 2), "--seeds");
  if (a > b) throw UsageError("--seeds: empty range");
  return {a, b};
}

// Builds the two controllers for a match setup, resolving variant and k from
// scripted strategies when not given.
struct MatchSetup {
  std::shared_ptr<const Graph> graph;
  std::optional<Variant> variant;
  std::size_t k = 0;
  std::unique_ptr<CopController> cop_proto;
  std::unique_ptr<RobberController> robber_proto;
  std::shared_ptr<const SolveResult> solved;
  SideSpec cops, robber;
};

void resolve_scripted(MatchSetup& m, const AnnotatedGraph& ag, const SideSpec& side, bool cop_side, const Globals& g) {
  if (side.kind != "scripted") return;
  ScriptedStrategy st;
  try {
    st = scripted_strategy(ag, side.arg, solve_options(g));
  } catch (const ScriptError& e) {
    throw UsageError(e.what());
  }
  if (m.variant && *m.variant != st.variant)
    throw UsageError("scripted strategy " + side.arg + " plays " + std::string(variant_name(st.variant)));
  m.variant = st.variant;
  if (cop_side) {
    if (!st.cop) throw UsageError(side.arg + " is a robber strategy");
    if (m.k == 0) m.k = st.cops;
    m.cop_proto = std::move(st.cop);
  } else {
    if (!st.robber) throw UsageError(side.arg + " is a cop strategy");
    if (m.k == 0) m.k = st.cops;
    m.robber_proto = std::move(st.robber);
  }
}

// Returns an exit code when the solver cannot be built.
int finish_setup(MatchSetup& m, const Globals& g) {
  if (!m.variant) throw UsageError("--variant is required unless a scripted side fixes it");
  if (m.k == 0) throw UsageError("--k is required unless a scripted side fixes it");
  GameSpec spec(m.graph, *m.variant, m.k);
  if (m.cops.kind == "solver" || m.robber.kind == "solver") {
    try {
      m.solved = std::make_shared<const SolveResult>(solve_fixed_k(spec, solve_options(g)));
    } catch (const BudgetExceeded& e) {
      std::cerr << "error: " << e.what() << "\n  the solver opponent is out of reach at this size; pick a scripted "
                                            "opponent (scripted:KEY) or raise --budget\n";
      return kBudget;
    }
    if (m.cops.kind == "solver") m.cop_proto = std::make_unique<SolverCopController>(m.solved);
    if (m.robber.kind == "solver") m.robber_proto = std::make_unique<SolverRobberController>(m.solved);
  }
  return kOk;
}

int cmd_simulate(const CLI::App& app, const Globals& g, const std::string& graph_file, const std::string& vname,
                 std::size_t k, const std::string& cops, const std::string& robber, const std::string& seeds,
                 std::size_t steps, const std::string& out_dir) {
  auto t0 = std::chrono::steady_clock::now();
  auto ag = load_graph(graph_file);
  require_connected(ag.graph, graph_file);
  MatchSetup m;
  m.graph = std::make_shared<const Graph>(ag.graph);
  if (!vname.empty()) m.variant = variant_arg(vname);
  m.k = k;
  m.cops = parse_side(cops, "--cops");
  m.robber = parse_side(robber, "--robber");
  resolve_scripted(m, ag, m.cops, true, g);
  resolve_scripted(m, ag, m.robber, false, g);
  if (int code = finish_setup(m, g)) return code;
  GameSpec spec(m.graph, *m.variant, m.k);
  auto [s0, s1] = parse_seeds(seeds);
  std::ofstream lines;
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    lines.open(fs::path(out_dir) / "transcripts.jsonl");
    if (!lines) throw UsageError("cannot write into " + out_dir);
  }
  json matches = json::array();
  std::size_t wins = 0, limits = 0, aborts = 0, replay_bad = 0;
  for (std::uint64_t seed = s0; seed <= s1; ++seed) {
    std::unique_ptr<CopController> c;
    std::unique_ptr<RobberController> r;
    try {
      c = m.cops.kind == "adversary" ? cop_adversary(m.cops.arg, seed) : m.cop_proto->clone();
      r = m.robber.kind == "adversary" ? robber_adversary(m.robber.arg, seed) : m.robber_proto->clone();
    } catch (const AdversaryError& e) {
      throw UsageError(e.what());
    }
    auto t = run_match(spec, *c, *r, steps);
    auto rp = replay(t);
    replay_bad += rp.consistent ? 0 : 1;
    wins += t.outcome == Outcome::CopWin;
    limits += t.outcome == Outcome::StepLimit;
    aborts += t.outcome == Outcome::Aborted;
    json jt = transcript_to_json(t);
    jt["seed"] = seed;
    if (lines) lines << jt.dump() << "\n";
    json row{{"seed", seed}, {"outcome", outcome_name(t.outcome)}, {"rounds", t.rounds}, {"replay_ok", rp.consistent}};
    if (!t.diagnosis.empty()) row["diagnosis"] = t.diagnosis;
    matches.push_back(row);
  }
  json res{{"graph", graph_file},
           {"variant", variant_name(*m.variant)},
           {"k", m.k},
           {"cops", cops},
           {"robber", robber},
           {"steps", steps},
           {"matches", matches},
           {"cop_wins", wins},
           {"step_limits", limits},
           {"aborted", aborts},
           {"replay_failures", replay_bad}};
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto report = run_report("simulate", app, res, secs);
  if (!out_dir.empty()) write_text_file((fs::path(out_dir) / "report.json").string(), report.dump(2) + "\n");
  emit(g, report);
  return aborts || replay_bad ? kAssert : kOk;
}

int cmd_play(const CLI::App& app, const Globals& g, const std::string& graph_file, const std::string& vname,
             std::size_t k, const std::string& role, const std::string& opponent, std::size_t steps,
             const std::string& transcript_file) {
  auto t0 = std::chrono::steady_clock::now();
  auto ag = load_graph(graph_file);
  require_connected(ag.graph, graph_file);
  if (role != "cop" && role != "robber") throw UsageError("--as must be cop or robber");
  const bool human_cops = role == "cop";
  MatchSetup m;
  m.graph = std::make_shared<const Graph>(ag.graph);
  if (!vname.empty()) m.variant = variant_arg(vname);
  m.k = k;
  auto opp = parse_side(opponent, "--opponent");
  (human_cops ? m.robber : m.cops) = opp;
  (human_cops ? m.cops : m.robber) = {"human", ""};
  resolve_scripted(m, ag, opp, !human_cops, g);
  if (int code = finish_setup(m, g)) return code;
  if (opp.kind == "adversary") {
    try {
      if (human_cops)
        m.robber_proto = robber_adversary(opp.arg, g.seed);
      else
        m.cop_proto = cop_adversary(opp.arg, g.seed);
    } catch (const AdversaryError& e) {
      throw UsageError(e.what());
    }
  }
  GameSpec spec(m.graph, *m.variant, m.k);
  cli::Prompt prompt(std::cin, std::cout);
  std::cout << "Playing " << variant_name(spec.variant) << " with " << spec.k << " cop(s) on " << ag.graph.order()
            << " vertices as the " << role << ".\n";
  Transcript t;
  if (human_cops) {
    cli::HumanCops hc(prompt);
    t = run_match(spec, hc, *m.robber_proto, steps);
  } else {
    cli::HumanRobber hr(prompt);
    t = run_match(spec, *m.cop_proto, hr, steps);
  }
  switch (t.outcome) {
    case Outcome::CopWin:
      std::cout << "The cops win after " << t.rounds << " round(s): the robber is "
                << (spec.variant == Variant::Classical ? "captured" : "surrounded") << ".\n";
      break;
    case Outcome::StepLimit: std::cout << "Step limit reached; the robber survives.\n"; break;
    case Outcome::Aborted: std::cout << "Game stopped: " << t.diagnosis << "\n"; break;
  }
  if (!transcript_file.empty()) write_text_file(transcript_file, transcript_to_json(t).dump(2) + "\n");
  json res{{"outcome", outcome_name(t.outcome)}, {"rounds", t.rounds}};
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!g.out.empty()) write_text_file(g.out, run_report("play", app, res, secs).dump(2) + "\n");
  return kOk;
}

// ---------------------------------------------------------------------------
// verify-bounds

int cmd_verify_bounds(const CLI::App& app, const Globals& g, bool all_connected, std::size_t max_n, std::size_t random,
                      std::size_t min_n, const std::vector<std::string>& files, bool certificates) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CorpusGraph> corpus;
  if (all_connected) {
    if (max_n > 7) throw UsageError("verify-bounds: --all-connected supports --max-n up to 7");
    corpus = connected_corpus(max_n);
  }
  if (random > 0) {
    if (min_n < 2 || min_n > max_n) throw UsageError("verify-bounds: need 2 <= --min-n <= --max-n");
    auto r = random_connected_corpus(random, min_n, max_n, g.seed);
    corpus.insert(corpus.end(), r.begin(), r.end());
  }
  for (const auto& f : files) {
    auto ag = load_graph(f);
    require_connected(ag.graph, f);
    if (ag.graph.size() == 0) throw UsageError(f + ": graph has no edges");
    corpus.push_back({f, ag.graph});
  }
  if (corpus.empty()) throw UsageError("verify-bounds: empty corpus (use --all-connected, --random or --graph)");
  auto rep = verify_inequality_suite(corpus, solve_options(g), [&](const GraphBounds& gb) {
    if (!g.quiet && (gb.skipped || !gb.violations.empty()))
      std::cerr << gb.id << (gb.skipped ? " skipped: " + gb.skip_reason : " VIOLATION") << "\n";
  });
  json graphs = json::array();
  for (const auto& gb : rep.graphs) graphs.push_back(graph_bounds_to_json(gb, certificates));
  json res{{"graphs", graphs},
           {"checked", rep.checked},
           {"skipped", rep.skipped},
           {"checks", rep.checks},
           {"violations", rep.violations}};
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(g, run_report("verify-bounds", app, res, secs));
  if (rep.violations) return kAssert;
  return rep.skipped ? kBudget : kOk;
}

int cmd_export_dot(const std::string& graph_file, const std::string& out) {
  auto ag = load_graph(graph_file);
  auto dot = to_dot(ag);
  if (out.empty())
    std::cout << dot;
  else
    write_text_file(out, dot);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and strategy laboratory for cops-and-robber surrounding games", "surround"};
  app.set_config("--config", "", "TOML-style config file; flags override it");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--workers", g.workers, "Solver worker threads (results do not depend on it)")->capture_default_str();
  app.add_option("--budget", g.budget, "State budget per solve")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--out", g.out, "Also write the JSON report (or generated file) here");
  app.add_flag("--quiet", g.quiet, "Only print to the --out file when given");

  // gen
  auto* gen = app.add_subcommand("gen", "Build a graph family and write annotated JSON");
  std::vector<std::string> gen_args;
  gen->add_option("family", gen_args, "Family and parameters, e.g. `k-bipartite 3 3`, `leafy 2 k-bipartite 2 2`, "
                                      "`mols-graph 3`, `line-complete 4`, `hslm 1 13 3`")
      ->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Decide a fixed k or find the cop number");
  std::string graph_file, vname;
  std::size_t k = 0, max_k = 0;
  bool find_min = false, trust = false;
  solve->add_option("--graph", graph_file, "Graph JSON")->required();
  solve->add_option("--variant", vname, "classical, vertex, vertex-r, edge or edge-r")->required();
  auto* kopt = solve->add_option("--k", k, "Number of cops to decide");
  solve->add_flag("--find-min", find_min, "Search for the cop number (default without --k)")->excludes(kopt);
  solve->add_flag("--trust-bounds", trust, "Start the search at the degree lower bound");
  solve->add_option("--max-k", max_k, "Stop the search here");

  // table
  auto* table = app.add_subcommand("table", "Reproduce a battery of expected cop numbers");
  std::vector<std::string> batteries;
  cli::BatteryParams bp;
  table->add_option("battery", batteries, "prop1, thm2-tightness, leafy-edge, leafy-bipartite, mols, linegraph, hslm")
      ->required();
  table->add_option("--max-size", bp.max_size, "Largest class size for prop1")->capture_default_str();
  table->add_option("--delta", bp.delta, "Maximum degree for the leafy and tightness batteries");
  table->add_flag("--extended", bp.extended, "Add the long-running rows");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run matches between controllers");
  std::string cops_side, robber_side, seeds = "0", out_dir;
  std::size_t steps = 10000;
  sim->add_option("--graph", graph_file, "Graph JSON")->required();
  sim->add_option("--variant", vname, "Variant (implied by scripted strategies)");
  sim->add_option("--k", k, "Number of cops (implied by scripted strategies)");
  sim->add_option("--cops", cops_side, "scripted:KEY, adversary:KIND or solver")->required();
  sim->add_option("--robber", robber_side, "scripted:KEY, adversary:KIND or solver")->required();
  sim->add_option("--seeds", seeds, "Seed or range a..b")->capture_default_str();
  sim->add_option("--steps", steps, "Round limit per match")->capture_default_str();
  sim->add_option("--transcripts", out_dir, "Directory for transcripts.jsonl and report.json");

  // verify-bounds
  auto* vb = app.add_subcommand("verify-bounds", "Check the cross-variant inequalities on a corpus");
  bool all_connected = false, certificates = false;
  std::size_t max_n = 5, min_n = 3, random = 0;
  std::vector<std::string> vb_files;
  vb->add_flag("--all-connected", all_connected, "All connected graphs with 2..max-n vertices");
  vb->add_option("--max-n", max_n, "Largest order")->capture_default_str();
  vb->add_option("--min-n", min_n, "Smallest order of random graphs")->capture_default_str();
  vb->add_option("--random", random, "Number of random connected graphs (uses --seed)");
  vb->add_option("--graph", vb_files, "Graph JSON files");
  vb->add_flag("--certificates", certificates, "Include solver verdicts for every graph");

  // play
  auto* play = app.add_subcommand("play", "Play against the solver or a scripted strategy");
  std::string role = "robber", opponent = "solver", transcript_file;
  play->add_option("--graph", graph_file, "Graph JSON")->required();
  play->add_option("--variant", vname, "Variant (implied by a scripted opponent)");
  play->add_option("--k", k, "Number of cops");
  play->add_option("--as", role, "cop or robber")->capture_default_str();
  play->add_option("--opponent", opponent, "solver, scripted:KEY or adversary:KIND")->capture_default_str();
  play->add_option("--steps", steps, "Round limit")->capture_default_str();
  play->add_option("--transcript", transcript_file, "Save the transcript here");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Write a graph as DOT");
  dot->add_option("--graph", graph_file, "Graph JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(app, g, gen_args, g.out);
    if (solve->parsed()) return cmd_solve(app, g, graph_file, vname, k, trust, max_k);
    if (table->parsed()) return cmd_table(app, g, batteries, bp);
    if (sim->parsed()) return cmd_simulate(app, g, graph_file, vname, k, cops_side, robber_side, seeds, steps, out_dir);
    if (vb->parsed()) return cmd_verify_bounds(app, g, all_connected, max_n, random, min_n, vb_files, certificates);
    if (play->parsed()) return cmd_play(app, g, graph_file, vname, k, role, opponent, steps, transcript_file);
    if (dot->parsed()) return cmd_export_dot(graph_file, g.out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
