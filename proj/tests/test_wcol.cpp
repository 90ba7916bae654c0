#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "powercol/errors.hpp"
#include "powercol/families.hpp"
#include "powercol/oracles.hpp"
#include "powercol/wcol.hpp"

using namespace powercol;

namespace {

Ordering id_order(const Graph& g) { return Ordering::identity(g.vertex_count()); }

}  // namespace

TEST_CASE("weak reach sets") {
  Graph p3(3, {{0, 1}, {1, 2}});
  Ordering sigma = id_order(p3);

  // from the right end of the path, radius 2 reaches everything
  CHECK(weak_reach_set(p3, sigma, Depth::finite(2), 2).members() == std::vector<int>{0, 1, 2});
  // the sigma-minimum vertex reaches only itself
  CHECK(weak_reach_set(p3, sigma, Depth::finite(2), 0).members() == std::vector<int>{0});

  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(weak_reach_set(k3, id_order(k3), Depth::finite(1), 2).members() ==
        std::vector<int>{0, 1, 2});
}

TEST_CASE("weak reachability needs the whole path to stay right of the target") {
  // 0-2-1 path ordered naturally: 0 is reachable from 1 only through 2,
  // and 2 sits right of 0, so the radius-2 reach of 1 includes 0.
  Graph g(3, {{0, 2}, {1, 2}});
  Ordering sigma = id_order(g);
  CHECK(weak_reach_set(g, sigma, Depth::finite(2), 1).members() == std::vector<int>{0, 1});
  // radius 1 cannot cross the middle vertex, and 2 lies right of 1
  CHECK(weak_reach_set(g, sigma, Depth::finite(1), 1).members() == std::vector<int>{1});
  // from the right end everything is reachable
  CHECK(weak_reach_set(g, sigma, Depth::finite(2), 2).members() == std::vector<int>{0, 1, 2});
}

TEST_CASE("radius-1 weak reach is the closed left neighborhood") {
  for (const auto& inst : {random_graph(9, 14, 3), random_k_tree(2, 8, 1)}) {
    const Graph& g = inst.graph;
    Ordering sigma = wcol_heuristic(g, Depth::finite(1));
    for (int x = 0; x < g.vertex_count(); ++x) {
      VertexSet expected(g.vertex_count());
      expected.insert(x);
      for (int w : g.neighbors(x))
        if (sigma.position(w) < sigma.position(x)) expected.insert(w);
      CHECK(weak_reach_set(g, sigma, Depth::finite(1), x) == expected);
    }
  }
}

TEST_CASE("two reach computations agree") {
  // the per-target relaxation and the per-source suffix BFS are independent
  // routes to the same sets
  for (const auto& inst : {random_graph(10, 18, 5), random_graph(9, 12, 8)}) {
    const Graph& g = inst.graph;
    for (auto k : {Depth::finite(2), Depth::finite(3), Depth::infinite()}) {
      Ordering sigma = wcol_heuristic(g, k);
      auto score = wcol_of_ordering(g, sigma, k);
      for (int x = 0; x < g.vertex_count(); ++x)
        CHECK(weak_reach_set(g, sigma, k, x).count() == score.reach_sizes[x]);
    }
  }
}

TEST_CASE("wcol of a fixed ordering") {
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(wcol_of_ordering(p3, id_order(p3), Depth::finite(1)).value == 2);

  Graph edgeless(5, {});
  CHECK(wcol_of_ordering(edgeless, id_order(edgeless), Depth::finite(3)).value == 1);

  Graph k5 = complete_graph(5).graph;
  auto score = wcol_of_ordering(k5, id_order(k5), Depth::finite(2));
  CHECK(score.value == 5);
  CHECK(score.argmax_vertex == 4);  // the sigma-max vertex reaches everyone
}

TEST_CASE("coloring number") {
  CHECK(coloring_number(random_k_tree(1, 6, 2).graph).value == 2);
  CHECK(coloring_number(complete_graph(5).graph).value == 5);
  CHECK(coloring_number(cycle_graph(6).graph).value == 3);
  CHECK(coloring_number(Graph(1, {})).value == 1);

  // the witness ordering attains the value
  for (const auto& inst : {random_graph(9, 15, 1), grid_graph(3, 3)}) {
    auto col = coloring_number(inst.graph);
    CHECK(wcol_of_ordering(inst.graph, col.witness, Depth::finite(1)).value == col.value);
  }
}

TEST_CASE("exact wcol on small graphs") {
  CHECK(wcol_exact(path_graph(5).graph, Depth::finite(1)).value == 2);
  CHECK(wcol_exact(complete_graph(4).graph, Depth::finite(2)).value == 4);
  CHECK(wcol_exact(complete_graph(4).graph, Depth::infinite()).value == 4);

  // independent full enumeration over the 9! orderings of the 9-path
  OracleLimits wide;
  wide.wcol_n = 9;
  int brute = wcol_exhaustive_oracle(path_graph(9).graph, Depth::finite(2), wide);
  CHECK(brute == 3);
  CHECK(wcol_exact(path_graph(9).graph, Depth::finite(2)).value == 3);
}

TEST_CASE("exact search returns an attaining witness") {
  for (const auto& inst : {random_graph(8, 12, 6), random_k_tree(2, 8, 3), cycle_graph(7)}) {
    for (auto k : {Depth::finite(2), Depth::infinite()}) {
      auto exact = wcol_exact(inst.graph, k);
      CHECK(wcol_of_ordering(inst.graph, exact.witness, k).value == exact.value);
    }
  }
}

TEST_CASE("exact search refuses large graphs") {
  CHECK_THROWS_AS(wcol_exact(path_graph(40).graph, Depth::finite(2)), LimitError);
  CHECK_NOTHROW(wcol_exact(path_graph(13).graph, Depth::finite(2), 13));
}

TEST_CASE("exact value never exceeds any single ordering") {
  for (const auto& inst : {random_graph(8, 13, 9), grid_graph(2, 4)}) {
    for (auto k : {Depth::finite(2), Depth::finite(3)}) {
      int exact = wcol_exact(inst.graph, k).value;
      CHECK(exact <= wcol_of_ordering(inst.graph, id_order(inst.graph), k).value);
      CHECK(exact <= wcol_of_ordering(inst.graph, wcol_heuristic(inst.graph, k), k).value);
    }
  }
}

TEST_CASE("wcol radius chain is monotone and starts at col") {
  for (const auto& inst :
       {random_graph(8, 12, 2), random_k_tree(2, 8, 0), cycle_graph(8), grid_graph(2, 4)}) {
    const Graph& g = inst.graph;
    int col = coloring_number(g).value;
    int previous = 0;
    for (int k = 1; k <= 4; ++k) {
      int value = wcol_exact(g, Depth::finite(k)).value;
      if (k == 1) CHECK(value == col);
      CHECK(value >= previous);
      previous = value;
    }
    CHECK(wcol_exact(g, Depth::infinite()).value >= previous);
  }
}

TEST_CASE("heuristic ordering stays within trivial bounds") {
  for (const auto& inst : {random_k_tree(1, 10, 4), cycle_graph(9), random_graph(10, 20, 5)}) {
    for (auto k : {Depth::finite(1), Depth::finite(2), Depth::finite(4)}) {
      Ordering sigma = wcol_heuristic(inst.graph, k);
      int value = wcol_of_ordering(inst.graph, sigma, k).value;
      CHECK(value <= inst.graph.vertex_count());
      if (!k.is_infinite() && k.finite_value() == 1)
        CHECK(value == coloring_number(inst.graph).value);  // smallest-last
    }
  }
  // trees stay within radius + 1 under the heuristic
  for (uint64_t seed = 0; seed < 4; ++seed) {
    auto tree = random_k_tree(1, 11, seed);
    for (int k = 1; k <= 4; ++k) {
      Ordering sigma = wcol_heuristic(tree.graph, Depth::finite(k));
      CHECK(wcol_of_ordering(tree.graph, sigma, Depth::finite(k)).value <= k + 1);
    }
  }
}

TEST_CASE("heuristic on cycles stays within 2k+1 and above the exact value") {
  for (int n = 3; n <= 12; ++n) {
    const Graph& g = cycle_graph(n).graph;
    for (int k = 1; k <= 3; ++k) {
      int heur = wcol_of_ordering(g, wcol_heuristic(g, Depth::finite(k)), Depth::finite(k)).value;
      int exact = wcol_exact(g, Depth::finite(k)).value;
      CHECK(heur >= exact);
      CHECK(heur <= std::min(2 * k + 1, n));
    }
  }
}

TEST_CASE("unbounded radius matches tree-depth") {
  auto p7 = treedepth_equals_wcol_inf_check(path_graph(7).graph);
  CHECK(p7.pass);
  CHECK(p7.details["treedepth"] == 3);

  auto k4 = treedepth_equals_wcol_inf_check(complete_graph(4).graph);
  CHECK(k4.pass);
  CHECK(k4.details["treedepth"] == 4);

  auto star = treedepth_equals_wcol_inf_check(complete_ary_tree(4, 1).graph);
  CHECK(star.pass);
  CHECK(star.details["treedepth"] == 2);
}

TEST_CASE("depth symbol") {
  CHECK(Depth::infinite().is_infinite());
  CHECK(Depth::finite(3).finite_value() == 3);
  CHECK(Depth::infinite().capped(6) == 5);
  CHECK(Depth::finite(9).capped(6) == 5);
  CHECK(Depth::finite(2).capped(6) == 2);
  CHECK(Depth::finite(2).str() == "2");
  CHECK(Depth::infinite().str() == "inf");
  CHECK_THROWS_AS(Depth::finite(0), std::invalid_argument);
  CHECK_THROWS_AS(Depth::infinite().finite_value(), std::logic_error);
}
