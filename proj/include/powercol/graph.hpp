#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace powercol {

/// Distance sentinel for unreachable vertex pairs. Kept explicit so that no
/// arithmetic is ever silently performed on "infinity".
inline constexpr int kUnreachable = -1;

/// Dense set of vertices over a fixed universe 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe_size() const { return n_; }
  bool contains(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { bits_[v >> 6] |= uint64_t{1} << (v & 63); }
  void erase(int v) { bits_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int count() const;
  bool empty() const { return count() == 0; }
  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  /// Members in ascending order.
  std::vector<int> members() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> bits_;
};

/// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
/// construction; adjacency lists are kept sorted so every downstream
/// iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  /// Builds the graph from an edge list. Duplicate edges collapse to one.
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  /// All edges as (u, v) pairs with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Index of edge {u,v} in edges(); -1 if absent.
  int edge_index(int u, int v) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

/// Total order on the vertices of a graph: a bijection vertex <-> rank.
class Ordering {
 public:
  Ordering() = default;

  static Ordering identity(int n);
  /// order[r] = vertex at rank r. Throws if not a permutation of 0..n-1.
  static Ordering from_rank_list(const std::vector<int>& order);

  int size() const { return static_cast<int>(pos_.size()); }
  int position(int v) const { return pos_.at(v); }
  int vertex_at(int rank) const { return inv_.at(rank); }
  const std::vector<int>& rank_list() const { return inv_; }

  bool operator==(const Ordering&) const = default;

 private:
  std::vector<int> pos_;  // vertex -> rank
  std::vector<int> inv_;  // rank -> vertex
};

/// Parses the edge-list format ("n m" header, then "u v" lines, '#' comment
/// lines) or DIMACS ("p edge n m", "e u v" 1-based), detected by a leading
/// "p ". Throws ParseError with the line number on malformed input.
Graph parse_graph(const std::string& text);

/// Edge-list serialization with sorted edges; parse(serialize(g)) == g.
std::string serialize_graph(const Graph& g);

/// BFS distances from v; kUnreachable marks vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int v);

/// Vertices at distance exactly k from v (k >= 1).
VertexSet kth_open_neighborhood(const Graph& g, int v, int k);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Largest finite eccentricity over all vertices (max over components).
int graph_diameter(const Graph& g);

bool graphs_equal(const Graph& a, const Graph& b);

}  // namespace powercol
