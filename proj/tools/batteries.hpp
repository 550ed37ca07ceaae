#pragma once

// Named batteries for `surround table`: rows of expected cop numbers and
// structural facts, each compared against a fresh computation.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "surround/bounds.hpp"
#include "surround/families.hpp"
#include "surround/latin.hpp"
#include "surround/solver.hpp"

namespace surround::cli {

enum class RowStatus { Pass, Fail, Indeterminate, Finding };

inline const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Indeterminate: return "INDETERMINATE";
    case RowStatus::Finding: return "FINDING";
  }
  return "?";
}

struct Row {
  std::string graph, quantity, expected, computed;
  RowStatus status = RowStatus::Pass;
  nlohmann::json certificate;
  double seconds = 0;
};

struct BatteryParams {
  std::size_t max_size = 3;
  std::size_t delta = 0;  // 0: battery default
  bool extended = false;
};

class BatteryRunner {
 public:
  BatteryRunner(SolveOptions opts, std::function<void(const Row&)> progress)
      : opts_(opts), progress_(std::move(progress)) {}

  std::vector<Row> rows;

  // Exact cop number.
  void exact(const std::string& id, const Graph& g, Variant v, std::size_t expected) {
    timed([&](Row& r) {
      r.graph = id;
      r.quantity = "c[" + std::string(variant_name(v)) + "]";
      r.expected = std::to_string(expected);
      CopNumberOptions co;
      co.solve = opts_;
      auto rep = cop_number(g, v, co, id);
      r.certificate = verdicts_to_json(rep);
      if (!rep.k_star) {
        r.computed = "in [" + std::to_string(rep.lower) + ", " + (rep.upper ? std::to_string(rep.upper) : "?") + "]";
        r.status = RowStatus::Indeterminate;
        return;
      }
      r.computed = std::to_string(*rep.k_star);
      r.status = *rep.k_star == expected ? RowStatus::Pass : RowStatus::Fail;
    });
  }

  // Computed without a reference value to compare against.
  void finding(const std::string& id, const Graph& g, Variant v, const std::string& note) {
    timed([&](Row& r) {
      r.graph = id;
      r.quantity = "c[" + std::string(variant_name(v)) + "]";
      r.expected = note;
      CopNumberOptions co;
      co.solve = opts_;
      auto rep = cop_number(g, v, co, id);
      r.certificate = verdicts_to_json(rep);
      r.computed = rep.k_star ? std::to_string(*rep.k_star) : "budget";
      r.status = rep.k_star ? RowStatus::Finding : RowStatus::Indeterminate;
    });
  }

  // Cop number at most k (k cops win) or at least k (k-1 cops lose).
  void at_most(const std::string& id, const Graph& g, Variant v, std::size_t k) { fixed(id, g, v, k, true); }
  void at_least(const std::string& id, const Graph& g, Variant v, std::size_t k) { fixed(id, g, v, k - 1, false); }

  void fact(const std::string& id, const std::string& quantity, const std::string& expected,
            const std::string& computed) {
    timed([&](Row& r) {
      r.graph = id;
      r.quantity = quantity;
      r.expected = expected;
      r.computed = computed;
      r.status = expected == computed ? RowStatus::Pass : RowStatus::Fail;
    });
  }

 private:
  void fixed(const std::string& id, const Graph& g, Variant v, std::size_t k, bool cops_win) {
    timed([&](Row& r) {
      r.graph = id;
      r.quantity = "c[" + std::string(variant_name(v)) + "]";
      r.expected = (cops_win ? "<= " : ">= ") + std::to_string(cops_win ? k : k + 1);
      try {
        auto res = solve_fixed_k(GameSpec(g, v, k), opts_);
        r.computed = std::string(verdict_name(res.verdict)) + " at k=" + std::to_string(k);
        r.certificate = {{"k", k},
                         {"verdict", verdict_name(res.verdict)},
                         {"states", res.stats.states},
                         {"placement", res.placement}};
        bool ok = (res.verdict == Verdict::CopWin) == cops_win;
        r.status = ok ? RowStatus::Pass : RowStatus::Fail;
      } catch (const BudgetExceeded& e) {
        r.computed = e.what();
        r.status = RowStatus::Indeterminate;
      }
    });
  }

  template <class F>
  void timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Row r;
    f(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress_) progress_(r);
    rows.push_back(std::move(r));
  }

  SolveOptions opts_;
  std::function<void(const Row&)> progress_;
};

inline const std::vector<std::string>& battery_names() {
  static const std::vector<std::string> names{"prop1", "thm2-tightness", "leafy-edge", "leafy-bipartite",
                                              "mols", "linegraph", "hslm"};
  return names;
}

inline std::string kab_id(std::size_t a, std::size_t b) {
  return "K" + std::to_string(a) + "," + std::to_string(b);
}

inline void run_battery(const std::string& name, const BatteryParams& p, BatteryRunner& run) {
  using V = Variant;
  if (name == "prop1") {
    for (std::size_t a = 1; a <= p.max_size; ++a)
      for (std::size_t b = a; b <= p.max_size; ++b) {
        auto g = complete_bipartite(a, b).graph;
        auto id = kab_id(a, b);
        run.exact(id, g, V::Classical, std::min<std::size_t>(2, a));
        run.exact(id, g, V::VertexSurroundRestrictive, a);
        run.exact(id, g, V::VertexSurround, b);
        run.exact(id, g, V::EdgeSurround, b);
        run.exact(id, g, V::EdgeSurroundRestrictive, b);
      }
  } else if (name == "thm2-tightness") {
    const std::size_t d = p.delta ? p.delta : 3;
    auto star = complete_bipartite(1, d).graph;
    run.exact(kab_id(1, d), star, V::VertexSurroundRestrictive, 1);
    run.exact(kab_id(1, d), star, V::VertexSurround, d);
    auto kdd = complete_bipartite(d, d).graph;
    run.exact(kab_id(d, d), kdd, V::VertexSurroundRestrictive, d);
    run.exact(kab_id(d, d), kdd, V::EdgeSurroundRestrictive, d);
  } else if (name == "leafy-edge") {
    const std::size_t d = p.delta ? p.delta : 3;
    if (d < 2) throw std::invalid_argument("leafy-edge needs --delta >= 2");
    auto g = attach_leaves(complete_bipartite(1, 1), d - 1).graph;
    const std::string id = "leafy(K2," + std::to_string(d - 1) + ")";
    run.exact(id, g, V::VertexSurround, 2 * (d - 1));
    run.exact(id, g, V::EdgeSurround, d);
    run.exact(id, g, V::VertexSurroundRestrictive, 2);
    run.exact(id, g, V::EdgeSurroundRestrictive, d);
  } else if (name == "leafy-bipartite") {
    const std::size_t d = p.delta ? p.delta : 4;
    if (d < 2) throw std::invalid_argument("leafy-bipartite needs --delta >= 2");
    const std::size_t k = d / 2, l = (d + 1) / 2;
    auto g = attach_leaves(complete_bipartite(k, k), l).graph;
    const std::string id = "leafy(" + kab_id(k, k) + "," + std::to_string(l) + ")";
    run.exact(id, g, V::VertexSurroundRestrictive, k + 1);
    run.exact(id, g, V::VertexSurround, (k + 1) * l);
    run.exact(id, g, V::EdgeSurroundRestrictive, d);
    // Below four the edge formula undercuts the maximum-degree lower bound.
    if (d >= 4)
      run.exact(id, g, V::EdgeSurround, k * l);
    else
      run.finding(id, g, V::EdgeSurround, "formula gives " + std::to_string(k * l) + ", below Delta");
  } else if (name == "mols") {
    for (std::size_t k : {2u, 3u, 4u, 5u}) {
      auto fam = generate_mols(k);
      bool ok = fam.squares.size() + 1 == k;
      for (std::size_t i = 0; i < fam.squares.size(); ++i) {
        ok = ok && is_latin(fam.squares[i]);
        for (std::size_t j = i + 1; j < fam.squares.size(); ++j) ok = ok && are_orthogonal(fam.squares[i], fam.squares[j]);
      }
      run.fact("MOLS(" + std::to_string(k) + ")", "pairwise orthogonal", "yes", ok ? "yes" : "no");
    }
    auto g3 = mols_graph(3).graph;
    auto dg = degrees(g3);
    run.fact("G3", "order", "18", std::to_string(g3.order()));
    run.fact("G3", "degrees", "3..3", std::to_string(dg.min) + ".." + std::to_string(dg.max));
    auto gi = girth(g3);
    run.fact("G3", "girth", "6", gi ? std::to_string(*gi) : "inf");
    run.exact("G3", g3, V::Classical, 3);
    run.at_most("G3", g3, V::VertexSurroundRestrictive, 4);
    if (p.extended) run.at_least("G3", g3, V::EdgeSurround, 6);
  } else if (name == "linegraph") {
    auto g = line_complete(4).graph;
    run.exact("L(K4)", g, V::VertexSurround, 4);
    run.exact("L(K4)", g, V::VertexSurroundRestrictive, 4);
  } else if (name == "hslm") {
    auto h1 = full_construction(1, 13, 3);
    run.fact("H[1,13,3]", "order", "472", std::to_string(h1.graph.order()));
    run.fact("H[1,13,3]", "max degree", "3", std::to_string(max_degree(h1.graph)));
    run.fact("H[1,13,3]", "degeneracy", "2", std::to_string(degeneracy(h1.graph)));
    run.at_most("H[1,13,3]", h1.graph, V::Classical, 2);
    auto h2 = full_construction(2, 8, 6);
    run.fact("H[2,8,6]", "max degree", "3", std::to_string(max_degree(h2.graph)));
    run.at_least("H[2,8,6]", h2.graph, V::VertexSurroundRestrictive, 2);
  } else {
    throw std::invalid_argument("unknown battery '" + name + "'");
  }
}

inline nlohmann::json row_to_json(const Row& r) {
  return {{"graph", r.graph},       {"quantity", r.quantity}, {"expected", r.expected},
          {"computed", r.computed}, {"status", status_name(r.status)}, {"certificate", r.certificate},
          {"seconds", r.seconds}};
}

}  // namespace surround::cli
