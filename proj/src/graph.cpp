#include "powercol/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "powercol/errors.hpp"

namespace powercol {

int VertexSet::count() const {
  int c = 0;
  for (uint64_t w : bits_) c += std::popcount(w);
  return c;
}

bool VertexSet::intersects(const VertexSet& o) const {
  size_t k = std::min(bits_.size(), o.bits_.size());
  for (size_t i = 0; i < k; ++i)
    if (bits_[i] & o.bits_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (size_t i = 0; i < bits_.size(); ++i) {
    uint64_t other = i < o.bits_.size() ? o.bits_[i] : 0;
    if (bits_[i] & ~other) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (size_t i = 0; i < bits_.size() && i < o.bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= i < o.bits_.size() ? o.bits_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (size_t i = 0; i < bits_.size() && i < o.bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  return *this;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<int, int>> canon;
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    canon.emplace(std::min(u, v), std::max(u, v));
  }
  adj_.assign(n, {});
  edges_.assign(canon.begin(), canon.end());
  m_ = static_cast<int>(edges_.size());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  const auto& row = adj_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

Ordering Ordering::identity(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return from_rank_list(order);
}

Ordering Ordering::from_rank_list(const std::vector<int>& order) {
  int n = static_cast<int>(order.size());
  Ordering o;
  o.inv_ = order;
  o.pos_.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    int v = order[r];
    if (v < 0 || v >= n || o.pos_[v] != -1)
      throw std::invalid_argument("ordering is not a permutation of 0..n-1");
    o.pos_[v] = r;
  }
  return o;
}

namespace {

struct Line {
  std::string text;
  int number;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.push_back({line.substr(first), number});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [text, number] : lines) {
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(in >> kind >> n >> m) || n < 0 || m < 0) fail(number, "malformed problem line");
      continue;
    }
    if (tag == "e") {
      if (n < 0) fail(number, "edge before problem line");
      long long u, v;
      if (!(in >> u >> v)) fail(number, "malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n) fail(number, "vertex id out of range 1..n");
      if (u == v) fail(number, "self-loop");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    fail(number, "unrecognized line");
  }
  if (n < 0) throw ParseError("missing problem line");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  // DIMACS is detected by its problem line; leading "c" comment lines may
  // precede it.
  bool dimacs = false;
  for (const auto& [line, number] : lines) {
    (void)number;
    if (line.rfind("c", 0) == 0 && (line.size() == 1 || line[1] == ' ' || line[1] == '\t'))
      continue;
    dimacs = line.rfind("p ", 0) == 0 || line == "p";
    break;
  }
  if (dimacs) return parse_dimacs(lines);

  long long n, m;
  {
    std::istringstream in(lines.front().text);
    std::string extra;
    if (!(in >> n >> m) || (in >> extra) || n < 0 || m < 0)
      fail(lines.front().number, "expected header \"n m\"");
  }
  if (static_cast<long long>(lines.size()) - 1 < m)
    throw ParseError("fewer edge lines than declared: expected " + std::to_string(m));
  if (static_cast<long long>(lines.size()) - 1 > m)
    fail(lines[static_cast<size_t>(m) + 1].number, "content beyond the declared edge count");

  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    const auto& [text2, number] = lines[static_cast<size_t>(i) + 1];
    std::istringstream in(text2);
    long long u, v;
    std::string extra;
    if (!(in >> u >> v) || (in >> extra)) fail(number, "malformed edge line");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(number, "vertex id out of range 0..n-1");
    if (u == v) fail(number, "self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<int> bfs_distances(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

VertexSet kth_open_neighborhood(const Graph& g, int v, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  auto dist = bfs_distances(g, v);
  VertexSet out(g.vertex_count());
  for (int w = 0; w < g.vertex_count(); ++w)
    if (dist[w] == k) out.insert(w);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    std::vector<int> comp;
    std::deque<int> queue{v};
    seen[v] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int graph_diameter(const Graph& g) {
  int diam = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) diam = std::max(diam, d);
  }
  return diam;
}

bool graphs_equal(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

}  // namespace powercol
