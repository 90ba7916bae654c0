#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "powercol/graph.hpp"

namespace powercol {

/// A generated graph together with the structural parameters known from its
/// construction. Tree-width and genus are declared metadata, never computed.
struct FamilyInstance {
  Graph graph;
  std::string family;
  nlohmann::ordered_json params;  // generator parameters, including seed
  std::optional<int> tree_width;
  std::optional<int> genus;
  int max_degree = 0;  // always equals graph.max_degree()

  /// Compact label, e.g. "path-7" or "ktree-2-6-s7".
  std::string name() const;

  /// Metadata sidecar written next to generated edge-list files.
  nlohmann::ordered_json sidecar() const;
};

FamilyInstance path_graph(int n);
FamilyInstance cycle_graph(int n);
FamilyInstance complete_graph(int n);
FamilyInstance grid_graph(int rows, int cols);

/// Rooted tree: the root has `delta` children, every other internal vertex
/// delta-1 children, all leaves at depth `height`. Vertices are numbered in
/// BFS order from the root.
FamilyInstance complete_ary_tree(int delta, int height);

/// k-tree grown from K_{k+1} by attaching each new vertex to a seed-chosen
/// existing k-clique. Chordal with tree-width exactly k.
FamilyInstance random_k_tree(int k, int n, uint64_t seed);

/// Uniform seed-deterministic simple graph with exactly m edges.
FamilyInstance random_graph(int n, long long m, uint64_t seed);

}  // namespace powercol
