// Acceptance run: one PASS/FAIL line per criterion. Arguments select criteria
// by number (default: all). Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "lift_check.hpp"
#include "oracle.hpp"
#include "surround/bounds.hpp"
#include "surround/families.hpp"
#include "surround/io.hpp"
#include "surround/latin.hpp"
#include "surround/scripted.hpp"

using namespace surround;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << "[" << what << "] ";
    }
  }
};

using V = Variant;

std::optional<std::size_t> cop_number_of(const Graph& g, Variant v) {
  return cop_number(g, v, CopNumberOptions{}).k_star;
}

void exact(Check& c, const std::string& id, const Graph& g, Variant v, std::size_t want) {
  auto got = cop_number_of(g, v);
  std::string tag = id + " " + std::string(variant_name(v));
  c.expect(got.has_value(), tag + " undecided");
  if (got) {
    c.expect(*got == want, tag + " = " + std::to_string(*got) + ", want " + std::to_string(want));
    c.note << tag << "=" << *got << " ";
  }
}

Verdict fixed(const Graph& g, Variant v, std::size_t k) { return solve_fixed_k(GameSpec(g, v, k)).verdict; }

Graph induced(const Graph& g, const std::vector<Vertex>& keep, std::vector<Vertex>& index) {
  index.assign(g.order(), ~Vertex{0});
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto ed : g.edges())
    if (index[ed.u] != ~Vertex{0} && index[ed.v] != ~Vertex{0}) e.emplace_back(index[ed.u], index[ed.v]);
  return Graph::build(keep.size(), e);
}

// ---------------------------------------------------------------------------

void bipartite_battery(Check& c) {
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = a; b <= 3; ++b) {
      auto g = complete_bipartite(a, b).graph;
      auto id = "K" + std::to_string(a) + "," + std::to_string(b);
      exact(c, id, g, V::Classical, std::min<std::size_t>(2, a));
      exact(c, id, g, V::VertexSurroundRestrictive, a);
      exact(c, id, g, V::VertexSurround, b);
      exact(c, id, g, V::EdgeSurround, b);
      exact(c, id, g, V::EdgeSurroundRestrictive, b);
    }
  if (c.ok) c.note.str("6 graphs x 5 variants exact");
}

void tightness(Check& c) {
  auto star = complete_bipartite(1, 3).graph;
  exact(c, "K1,3", star, V::VertexSurroundRestrictive, 1);
  exact(c, "K1,3", star, V::VertexSurround, 3);
  auto k33 = complete_bipartite(3, 3).graph;
  exact(c, "K3,3", k33, V::VertexSurroundRestrictive, 3);
  exact(c, "K3,3", k33, V::EdgeSurroundRestrictive, 3);
}

void leafy_edge(Check& c) {
  auto g = attach_leaves(complete_bipartite(1, 1), 2).graph;
  exact(c, "leafy(K2,2)", g, V::VertexSurround, 4);
  exact(c, "leafy(K2,2)", g, V::EdgeSurround, 3);
  exact(c, "leafy(K2,2)", g, V::VertexSurroundRestrictive, 2);
  exact(c, "leafy(K2,2)", g, V::EdgeSurroundRestrictive, 3);
}

void leafy_bipartite(Check& c) {
  auto g = attach_leaves(complete_bipartite(2, 2), 2).graph;
  exact(c, "leafy(K2,2;2)", g, V::VertexSurroundRestrictive, 3);
  exact(c, "leafy(K2,2;2)", g, V::VertexSurround, 6);
  exact(c, "leafy(K2,2;2)", g, V::EdgeSurroundRestrictive, 4);
  exact(c, "leafy(K2,2;2)", g, V::EdgeSurround, 4);
  // Delta = 3 instance: recorded, not asserted.
  auto g3 = attach_leaves(complete_bipartite(1, 1), 2).graph;
  auto e3 = cop_number_of(g3, V::EdgeSurround);
  c.note << "| finding: leafy(K1,1;2) edge=" << (e3 ? std::to_string(*e3) : "?") << " (formula k*l=2)";
}

// Independent check of the field tables: associativity, distributivity and
// inverses, straight from the operation tables.
bool field_ok(std::size_t q) {
  auto f = build_field(q);
  for (std::size_t a = 0; a < q; ++a) {
    bool add_inv = false, mul_inv = a == 0;
    for (std::size_t b = 0; b < q; ++b) {
      add_inv = add_inv || f.plus(a, b) == 0;
      mul_inv = mul_inv || f.times(a, b) == 1;
      if (f.plus(a, b) != f.plus(b, a) || f.times(a, b) != f.times(b, a)) return false;
      for (std::size_t x = 0; x < q; ++x) {
        if (f.plus(f.plus(a, b), x) != f.plus(a, f.plus(b, x))) return false;
        if (f.times(f.times(a, b), x) != f.times(a, f.times(b, x))) return false;
        if (f.times(a, f.plus(b, x)) != f.plus(f.times(a, b), f.times(a, x))) return false;
      }
    }
    if (!add_inv || !mul_inv || f.plus(a, 0) != a || f.times(a, 1) != a) return false;
  }
  return true;
}

// Pair counts over the k^2 cells, independent of are_orthogonal.
bool orthogonal_by_count(const LatinSquare& x, const LatinSquare& y) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const std::size_t k = x.grid.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) seen.insert({x.grid[i][j], y.grid[i][j]});
  return seen.size() == k * k;
}

void mols(Check& c, bool extended) {
  for (std::size_t k : {2u, 3u, 4u, 5u}) {
    auto fam = generate_mols(k);
    c.expect(fam.squares.size() + 1 == k, "MOLS(" + std::to_string(k) + ") size");
    for (std::size_t i = 0; i < fam.squares.size(); ++i) {
      c.expect(is_latin(fam.squares[i]), "latin");
      for (std::size_t j = i + 1; j < fam.squares.size(); ++j)
        c.expect(orthogonal_by_count(fam.squares[i], fam.squares[j]), "orthogonal k=" + std::to_string(k));
    }
  }
  auto g3 = mols_graph(3).graph;
  auto dg = degrees(g3);
  c.expect(g3.order() == 18, "order");
  c.expect(dg.min == 3 && dg.max == 3, "3-regular");
  c.expect(oracle::girth(g3) == std::optional<std::size_t>(6), "girth 6");
  exact(c, "G3", g3, V::Classical, 3);
  c.expect(fixed(g3, V::VertexSurroundRestrictive, 4) == Verdict::CopWin, "vertex-r k=4 cop win");
  c.note << "vertex-r<=4 ";
  if (extended) {
    c.expect(fixed(g3, V::EdgeSurround, 5) == Verdict::RobberWin, "edge k=5 robber win");
    c.note << "edge>=6 (extended) ";
  }
}

void line_graph_k4(Check& c) {
  auto g = line_complete(4).graph;
  exact(c, "L(K4)", g, V::VertexSurround, 4);
  exact(c, "L(K4)", g, V::VertexSurroundRestrictive, 4);
}

void inequalities(Check& c) {
  auto corpus = connected_corpus(5);
  auto extra = random_connected_corpus(100, 2, 7, 0);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  auto rep = verify_inequality_suite(corpus);
  c.expect(rep.skipped == 0, "skipped graphs");
  c.expect(rep.violations == 0, std::to_string(rep.violations) + " violations");
  for (const auto& gb : rep.graphs)
    for (const auto& v : gb.violations) c.note << gb.id << ": " << v.bound << " (" << v.detail << ") ";
  c.note << rep.checked << " graphs, " << rep.checks << " checks, " << rep.violations << " violations";
}

void hslm_small(Check& c) {
  constexpr std::size_t s = 1, l = 13, m = 3;
  auto ag = full_construction(s, l, m);
  const auto& g = ag.graph;
  c.expect(g.order() == 472, "order 472");
  c.expect(max_degree(g) == 3, "Delta 3");
  c.expect(degeneracy(g) == 2, "degeneracy 2");

  // Per copy: adjacent roots 2s+2l+1 apart; balls within s+l of their root
  // and balls of non-adjacent base vertices more than 2l apart.
  const auto& base = *ag.base;
  std::size_t pairs = 0;
  for (int i = 1; i <= 2; ++i) {
    std::vector<Vertex> keep;
    for (Vertex a = 0; a < base.order(); ++a) {
      auto t = ag.role(role_key("tree", i, a));
      keep.insert(keep.end(), t.begin(), t.end());
    }
    for (const auto& [a, b] : ag.orientation->arcs) {
      auto p = ag.role(role_key("path", i, a, b));
      keep.insert(keep.end(), p.begin(), p.end());
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<Vertex> idx;
    auto sub = induced(g, keep, idx);
    for (const auto& [a, b] : ag.orientation->arcs) {
      auto d = distances_from(sub, idx[ag.vertex(role_key("root", i, a))]);
      c.expect(d[idx[ag.vertex(role_key("root", i, b))]] == 2 * s + 2 * l + 1, "root distance");
      ++pairs;
    }
    for (Vertex a = 0; a < base.order(); a += 3) {
      auto d = distances_from(sub, idx[ag.vertex(role_key("root", i, a))]);
      std::vector<Vertex> ball;
      for (Vertex v : ag.role(role_key("ball", i, a))) {
        c.expect(d[idx[v]] <= s + l, "ball radius");
        ball.push_back(idx[v]);
      }
      auto far = distances_from_set(sub, ball);
      for (Vertex b = 0; b < base.order(); ++b) {
        if (a == b || base.adjacent(a, b)) continue;
        for (Vertex w : ag.role(role_key("ball", i, b))) c.expect(far[idx[w]] > 2 * l, "ball separation");
      }
    }
  }
  c.note << pairs << " root pairs at distance 29; ";

  auto res = std::make_shared<const SolveResult>(solve_fixed_k(GameSpec(g, V::Classical, 2)));
  c.expect(res->verdict == Verdict::CopWin, "classical k=2 cop win");
  c.note << "solver: " << verdict_name(res->verdict) << " over " << res->stats.states << " states; ";

  // The scripted cops against the adversary pool and the solver robber.
  auto st = scripted_strategy(ag, "hslm-cops-classical");
  GameSpec spec(g, V::Classical, 2);
  std::size_t wins = 0, games = 0, worst = 0;
  auto play = [&](RobberController& r) {
    auto cops = st.cop->clone();
    auto t = run_match(spec, *cops, r, 100'000);
    ++games;
    bool good = t.outcome == Outcome::CopWin && replay(t).consistent;
    wins += good;
    worst = std::max(worst, t.rounds);
    if (!good) c.note << r.name() << ": " << outcome_name(t.outcome) << " " << t.diagnosis << "; ";
  };
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    for (const char* kind : {"random", "greedy", "greedy-distance"}) {
      auto r = robber_adversary(kind, seed);
      play(*r);
    }
  SolverRobberController opt(res);
  play(opt);
  c.expect(wins == games, "scripted cops lost a game");
  c.note << "scripted cops " << wins << "/" << games << ", worst " << worst << " rounds";
}

void hslm_separation(Check& c) {
  auto ag = full_construction(2, 8, 6);
  const auto& g = ag.graph;
  c.expect(max_degree(g) == 3, "Delta 3");
  auto res = std::make_shared<const SolveResult>(solve_fixed_k(GameSpec(g, V::VertexSurroundRestrictive, 1)));
  c.expect(res->verdict == Verdict::RobberWin, "vertex-r k=1 robber win");
  c.note << "n=" << g.order() << ", solver " << verdict_name(res->verdict) << " over " << res->stats.states
         << " states; ";

  auto st = scripted_strategy(ag, "hslm-robber-vr");
  GameSpec spec(g, V::VertexSurroundRestrictive, 1);
  std::size_t survived = 0, games = 0;
  auto play = [&](CopController& cops) {
    auto r = st.robber->clone();
    auto t = run_match(spec, cops, *r, 10'000);
    ++games;
    bool good = t.outcome == Outcome::StepLimit && replay(t).consistent;
    survived += good;
    if (!good) c.note << cops.name() << ": " << outcome_name(t.outcome) << " " << t.diagnosis << "; ";
  };
  {
    auto greedy = cop_adversary("greedy", 0);
    play(*greedy);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto rnd = cop_adversary("random", seed);
    play(*rnd);
  }
  SolverCopController opt(res);
  play(opt);
  c.expect(survived == games, "scripted robber was surrounded");
  c.note << "scripted robber survived " << survived << "/" << games << " x 10^4 steps";
}

void lifts(Check& c) {
  std::size_t ok = 0, total = 0, skipped = 0;
  for (const auto& cg : connected_corpus(5)) {
    liftcheck::TargetCache cache;
    for (auto [from, to] : lift_pairs()) {
      auto pr = liftcheck::check_pair(cg.graph, from, to, {}, &cache);
      ++total;
      skipped += pr.solver_skipped;
      bool good = pr.exhaustive_ok && pr.vs_solver_ok;
      ok += good;
      if (!good)
        c.note << cg.id << " " << variant_name(from) << "->" << variant_name(to) << ": " << pr.detail << "; ";
    }
  }
  c.expect(ok == total, "lift failures");
  c.note << ok << "/" << total << " lifts sound";
  if (skipped) c.note << " (" << skipped << " without a solver robber)";
}

void properties(Check& c) {
  // Oracle equivalence, state by state.
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto graphs = n == 1 ? std::vector<Graph>{Graph::build(1, {})} : connected_graphs(n);
    for (const auto& g : graphs)
      for (auto var : kAllVariants) {
        if (on_edges(var) && g.size() == 0) continue;
        for (std::size_t k = 1; k <= 2; ++k) {
          GameSpec spec(g, var, k);
          auto res = solve_fixed_k(spec);
          auto ref = oracle::naive_solve(spec);
          c.expect((res.verdict == Verdict::CopWin) == ref.cops_win, "oracle verdict");
          for (std::size_t i = 0; i < ref.tuples.size(); ++i) {
            auto sorted = sorted_copy(ref.tuples[i]);
            for (Vertex r = 0; r < g.order(); ++r) {
              bool same = res.won(sorted, r, Side::Cops) == bool(ref.win[0][i][r]) &&
                          res.won(sorted, r, Side::Robber) == bool(ref.win[1][i][r]);
              if (!same) c.expect(false, "oracle state");
              ++compared;
            }
          }
        }
      }
  }
  c.note << compared << " states match the reference; ";

  // Monotone in k.
  for (const auto& cg : connected_corpus(5))
    for (auto var : kAllVariants) {
      bool won = false;
      for (std::size_t k = 1; k <= 3; ++k) {
        bool now = fixed(cg.graph, var, k) == Verdict::CopWin;
        c.expect(!(won && !now), "monotone " + cg.id);
        won = won || now;
      }
    }

  // Worker counts.
  for (auto g : {attach_leaves(complete_bipartite(1, 1), 2).graph, complete_bipartite(3, 3).graph})
    for (auto var : kAllVariants) {
      GameSpec spec(g, var, 2);
      auto a = solve_fixed_k(spec, {200'000'000, 1});
      auto b = solve_fixed_k(spec, {200'000'000, 4});
      bool same = a.verdict == b.verdict && a.placement == b.placement;
      for (std::uint64_t i = 0; same && i < a.num_states(); ++i) same = a.rank(i) == b.rank(i);
      c.expect(same, "workers " + std::string(variant_name(var)));
    }

  // Replay: transcripts survive a JSON round trip and replay to the same
  // outcome; a tampered transcript is caught.
  std::size_t replays = 0;
  for (const auto& cg : connected_corpus(4))
    for (auto var : kAllVariants) {
      CopNumberOptions co;
      co.keep_results = true;
      auto rep = cop_number(cg.graph, var, co);
      if (!rep.cop_win) continue;
      auto graph = std::make_shared<const Graph>(cg.graph);
      GameSpec spec(graph, var, *rep.k_star);
      SolverCopController cops(rep.cop_win);
      auto rob = robber_adversary("random", replays);
      auto t = run_match(spec, cops, *rob, 1000);
      auto back = transcript_from_json(transcript_to_json(t), graph);
      auto rp = replay(back);
      c.expect(rp.consistent && rp.outcome == t.outcome && t.outcome == Outcome::CopWin, "replay " + cg.id);
      ++replays;
    }
  {
    auto graph = std::make_shared<const Graph>(complete_bipartite(2, 3).graph);
    GameSpec spec(graph, V::VertexSurround, 3);
    auto res = std::make_shared<const SolveResult>(solve_fixed_k(spec));
    SolverCopController cops(res);
    auto rob = robber_adversary("greedy", 0);
    auto t = run_match(spec, cops, *rob, 1000);
    // Move one cop two steps at once in the first cop move.
    auto bad = t;
    auto prev = t.cop_placement;
    bool tampered = false;
    for (auto& st : bad.steps) {
      if (st.mover != Side::Cops) {
        prev = st.cops;
        continue;
      }
      for (Position p = 0; p < graph->order(); ++p)
        if (!cop_move_legal(spec, prev[0], p)) {
          st.cops[0] = p;
          tampered = true;
          break;
        }
      break;
    }
    c.expect(tampered, "tamper setup");
    c.expect(!replay(bad).consistent, "tamper detection");
  }
  c.note << replays << " replays; ";

  for (auto q : supported_field_orders()) {
    c.expect(verify_field_axioms(build_field(q)), "field axioms q=" + std::to_string(q));
    c.expect(field_ok(q), "field tables q=" + std::to_string(q));
  }
  c.note << "field axioms on " << supported_field_orders().size() << " orders";
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  bool extended = true;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--no-extended")
      extended = false;
    else
      only.insert(std::stoi(a));
  }
  std::vector<Criterion> all{
      {1, "complete bipartite battery", bipartite_battery},
      {2, "star and K3,3 tightness", tightness},
      {3, "leafy K2 at Delta 3", leafy_edge},
      {4, "leafy K2,2 at Delta 4", leafy_bipartite},
      {5, "MOLS graphs", [&](Check& c) { mols(c, extended); }},
      {6, "line graph of K4", line_graph_k4},
      {7, "inequality suite", inequalities},
      {8, "H[1,13,3] classical two cops", hslm_small},
      {9, "H[2,8,6] one restrictive cop fails", hslm_separation},
      {10, "strategy lifting", lifts},
      {11, "property suites", properties},
  };
  int failed = 0;
  for (const auto& cr : all) {
    if (!only.empty() && !only.count(cr.id)) continue;
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << cr.id << "  " << cr.name << "  (" << std::fixed
              << std::setprecision(1) << secs << " s)  " << c.note.str() << std::endl;
  }
  return failed ? 1 : 0;
}
