#include "powercol/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "powercol/rng.hpp"

namespace powercol {

namespace {

using Edges = std::vector<std::pair<int, int>>;

FamilyInstance make(Graph g, std::string family, nlohmann::ordered_json params,
                    std::optional<int> tree_width, std::optional<int> genus) {
  FamilyInstance inst;
  inst.max_degree = g.max_degree();
  inst.graph = std::move(g);
  inst.family = std::move(family);
  inst.params = std::move(params);
  inst.tree_width = tree_width;
  inst.genus = genus;
  return inst;
}

}  // namespace

std::string FamilyInstance::name() const {
  std::string out = family;
  for (const auto& [key, value] : params.items()) {
    if (key == "seed")
      out += "-s" + value.dump();
    else
      out += "-" + value.dump();
  }
  return out;
}

nlohmann::ordered_json FamilyInstance::sidecar() const {
  nlohmann::ordered_json j;
  j["family"] = family;
  j["params"] = params;
  j["n"] = graph.vertex_count();
  j["m"] = graph.edge_count();
  j["max_degree"] = max_degree;
  if (tree_width) j["tree_width"] = *tree_width;
  if (genus) j["genus"] = *genus;
  return j;
}

FamilyInstance path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(Graph(n, e), "path", {{"n", n}}, n >= 2 ? 1 : 0, 0);
}

FamilyInstance cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Edges e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make(Graph(n, e), "cycle", {{"n", n}}, 2, 0);
}

FamilyInstance complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Edges e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make(Graph(n, e), "complete", {{"n", n}}, n - 1, std::nullopt);
}

FamilyInstance grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
  auto id = [cols](int r, int c) { return r * cols + c; };
  Edges e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return make(Graph(rows * cols, e), "grid", {{"rows", rows}, {"cols", cols}},
              std::min(rows, cols), 0);
}

FamilyInstance complete_ary_tree(int delta, int height) {
  if (delta < 3) throw std::invalid_argument("complete-ary tree needs delta >= 3");
  if (height < 0) throw std::invalid_argument("height must be >= 0");
  Edges e;
  int next = 1;
  std::vector<int> frontier{0};
  for (int depth = 0; depth < height; ++depth) {
    std::vector<int> child_frontier;
    int children = depth == 0 ? delta : delta - 1;
    for (int parent : frontier) {
      for (int c = 0; c < children; ++c) {
        e.emplace_back(parent, next);
        child_frontier.push_back(next);
        ++next;
      }
    }
    frontier = std::move(child_frontier);
  }
  return make(Graph(next, e), "tree", {{"delta", delta}, {"height", height}}, 1, 0);
}

FamilyInstance random_k_tree(int k, int n, uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k-tree needs k >= 1");
  if (n <= k) throw std::invalid_argument("k-tree needs n > k");
  Edges e;
  for (int u = 0; u <= k && u < n; ++u)
    for (int v = u + 1; v <= k && v < n; ++v) e.emplace_back(u, v);

  // Every k-subset of the base clique is an attachable k-clique; after each
  // attachment of vertex w to clique C, the new k-cliques are the k-subsets
  // of C+w containing w.
  std::vector<std::vector<int>> cliques;
  {
    std::vector<int> base(k + 1);
    for (int i = 0; i <= k; ++i) base[i] = i;
    for (int skip = 0; skip <= k; ++skip) {
      std::vector<int> c;
      for (int i = 0; i <= k; ++i)
        if (i != skip) c.push_back(base[i]);
      cliques.push_back(std::move(c));
    }
  }

  SplitMix64 rng(seed);
  for (int w = k + 1; w < n; ++w) {
    const auto pick = cliques[rng.next_below(cliques.size())];
    for (int u : pick) e.emplace_back(u, w);
    for (int skip = 0; skip < k; ++skip) {
      std::vector<int> c;
      for (int i = 0; i < k; ++i)
        if (i != skip) c.push_back(pick[i]);
      c.push_back(w);
      cliques.push_back(std::move(c));
    }
  }
  return make(Graph(n, e), "ktree",
              {{"k", k}, {"n", n}, {"seed", seed}}, k, std::nullopt);
}

FamilyInstance random_graph(int n, long long m, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random graph needs n >= 0");
  long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_m) throw std::invalid_argument("edge count exceeds n(n-1)/2");

  Edges all;
  all.reserve(static_cast<size_t>(max_m));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);

  // Partial Fisher-Yates over the full pair list: first m entries are a
  // uniform m-subset, deterministic in the seed.
  SplitMix64 rng(seed);
  for (long long i = 0; i < m; ++i) {
    long long j = i + static_cast<long long>(rng.next_below(static_cast<uint64_t>(max_m - i)));
    std::swap(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]);
  }
  all.resize(static_cast<size_t>(m));
  return make(Graph(n, all), "random",
              {{"n", n}, {"m", m}, {"seed", seed}}, std::nullopt, std::nullopt);
}

}  // namespace powercol
