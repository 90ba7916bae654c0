#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "powercol/families.hpp"
#include "powercol/graph.hpp"

using namespace powercol;

namespace {

// Chordality via a perfect elimination ordering: repeatedly remove a
// simplicial vertex (neighborhood forms a clique in the remaining graph).
bool has_perfect_elimination_ordering(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (int round = 0; round < n; ++round) {
    int found = -1;
    for (int v = 0; v < n && found < 0; ++v) {
      if (removed[v]) continue;
      std::vector<int> live;
      for (int w : g.neighbors(v))
        if (!removed[w]) live.push_back(w);
      bool simplicial = true;
      for (size_t i = 0; i < live.size() && simplicial; ++i)
        for (size_t j = i + 1; j < live.size() && simplicial; ++j)
          if (!g.has_edge(live[i], live[j])) simplicial = false;
      if (simplicial) found = v;
    }
    if (found < 0) return false;
    removed[found] = 1;
  }
  return true;
}

}  // namespace

TEST_CASE("standard families") {
  auto p3 = path_graph(3);
  CHECK(p3.graph.edge_count() == 2);
  CHECK(p3.tree_width == 1);

  auto c5 = cycle_graph(5);
  CHECK(c5.graph.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.graph.degree(v) == 2);

  auto k4 = complete_graph(4);
  CHECK(k4.graph.edge_count() == 6);
  CHECK(k4.max_degree == 3);

  auto grid = grid_graph(3, 4);
  CHECK(grid.graph.vertex_count() == 12);
  CHECK(grid.graph.edge_count() == 3 * 3 + 2 * 4);
  CHECK(grid.genus == 0);

  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("complete-ary tree orders") {
  CHECK(complete_ary_tree(3, 0).graph.vertex_count() == 1);

  auto star = complete_ary_tree(3, 1);
  CHECK(star.graph.vertex_count() == 4);
  CHECK(star.graph.degree(0) == 3);

  auto t32 = complete_ary_tree(3, 2);
  CHECK(t32.graph.vertex_count() == 10);  // (3*2^2 - 2)/(3 - 2)
  CHECK(t32.max_degree == 3);

  CHECK_THROWS_AS(complete_ary_tree(2, 1), std::invalid_argument);
}

TEST_CASE("complete-ary tree matches the closed-form order for all tested sizes") {
  for (int delta = 3; delta <= 6; ++delta) {
    for (int p = 1; p <= 8; ++p) {
      long long expected =
          (static_cast<long long>(delta) *
               static_cast<long long>(std::pow(delta - 1, p / 2)) - 2) / (delta - 2);
      auto tree = complete_ary_tree(delta, p / 2);
      CHECK(tree.graph.vertex_count() == expected);
      CHECK(tree.graph.edge_count() == tree.graph.vertex_count() - 1);
    }
  }
}

TEST_CASE("k-trees") {
  auto line = random_k_tree(1, 5, 3);
  CHECK(line.graph.edge_count() == 4);  // 1-trees are trees
  CHECK(line.tree_width == 1);

  auto base = random_k_tree(2, 3, 9);
  CHECK(base.graph.edge_count() == 3);  // the base clique K_3

  auto kt = random_k_tree(2, 6, 7);
  CHECK(kt.graph.edge_count() == 2 * 6 - 3);  // k*n - k(k+1)/2
  CHECK(kt.tree_width == 2);

  CHECK_THROWS_AS(random_k_tree(2, 2, 0), std::invalid_argument);
}

TEST_CASE("k-trees are chordal") {
  for (int k = 1; k <= 3; ++k)
    for (uint64_t seed = 0; seed < 4; ++seed)
      CHECK(has_perfect_elimination_ordering(random_k_tree(k, 10, seed).graph));
}

TEST_CASE("random graphs honor the edge count and the seed") {
  CHECK(random_graph(5, 10, 42).graph.edge_count() == 10);  // forced K_5
  CHECK(random_graph(4, 0, 0).graph.edge_count() == 0);

  auto a = random_graph(6, 7, 1);
  auto b = random_graph(6, 7, 1);
  CHECK(graphs_equal(a.graph, b.graph));

  bool any_different = false;
  for (uint64_t seed = 2; seed < 8 && !any_different; ++seed)
    any_different = !graphs_equal(a.graph, random_graph(6, 7, seed).graph);
  CHECK(any_different);

  CHECK_THROWS_AS(random_graph(4, 7, 0), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
  for (uint64_t seed : {0ull, 5ull, 99ull}) {
    CHECK(graphs_equal(random_k_tree(2, 9, seed).graph, random_k_tree(2, 9, seed).graph));
    CHECK(graphs_equal(random_graph(8, 11, seed).graph, random_graph(8, 11, seed).graph));
  }
}

TEST_CASE("declared metadata matches the built graph") {
  for (const auto& inst : {path_graph(7), cycle_graph(6), complete_graph(5), grid_graph(2, 5),
                           complete_ary_tree(4, 1), random_k_tree(2, 8, 4),
                           random_graph(9, 12, 11)}) {
    CHECK(inst.max_degree == inst.graph.max_degree());
    CHECK_FALSE(inst.name().empty());
    auto sidecar = inst.sidecar();
    CHECK(sidecar["n"] == inst.graph.vertex_count());
    CHECK(sidecar["m"] == inst.graph.edge_count());
  }
}
