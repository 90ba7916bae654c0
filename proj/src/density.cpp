#include "powercol/density.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

#include "powercol/errors.hpp"

namespace powercol {

namespace {

// Dinic max-flow on small integer-capacity networks.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : graph_(nodes) {}

  void add_edge(int from, int to, long long cap) {
    graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      iter_.assign(graph_.size(), 0);
      while (long long pushed = dfs(s, t, kInf)) flow += pushed;
    }
    return flow;
  }

  // Source side of the min cut; valid after max_flow.
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(graph_.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& e : graph_[u])
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          queue.push_back(e.to);
        }
    }
    return seen;
  }

 private:
  static constexpr long long kInf = 1ll << 60;

  struct Edge {
    int to;
    long long cap;
    int rev;
  };

  bool bfs(int s, int t) {
    level_.assign(graph_.size(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& e : graph_[u])
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          queue.push_back(e.to);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t) return limit;
    for (int& i = iter_[u]; i < static_cast<int>(graph_[u].size()); ++i) {
      Edge& e = graph_[u][i];
      if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
      long long pushed = dfs(e.to, t, std::min(limit, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        graph_[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

long long edges_within(const Graph& g, const VertexSet& s) {
  long long count = 0;
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) ++count;
  return count;
}

// Finds a nonempty vertex set T maximizing b|E(T)| - a|T| if the maximum is
// positive (i.e. some subgraph has density > a/b); empty optional otherwise.
std::optional<VertexSet> denser_subgraph(const Graph& g, long long a, long long b) {
  int n = g.vertex_count();
  int m = g.edge_count();
  int source = 0, sink = 1;
  auto edge_node = [](int e) { return 2 + e; };
  auto vertex_node = [m](int v) { return 2 + m + v; };
  FlowNetwork net(2 + m + n);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    net.add_edge(source, edge_node(e), b);
    net.add_edge(edge_node(e), vertex_node(u), 1ll << 40);
    net.add_edge(edge_node(e), vertex_node(v), 1ll << 40);
  }
  for (int v = 0; v < n; ++v) net.add_edge(vertex_node(v), sink, a);
  long long flow = net.max_flow(source, sink);
  if (flow >= static_cast<long long>(b) * m) return std::nullopt;
  auto side = net.source_side(source);
  VertexSet t(n);
  for (int v = 0; v < n; ++v)
    if (side[vertex_node(v)]) t.insert(v);
  if (t.empty()) throw ConsistencyError("cut below capacity but empty dense side");
  return t;
}

}  // namespace

MadResult max_average_degree(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mad of the empty graph");
  VertexSet witness = VertexSet::full(n);
  Rational density(g.edge_count(), n);
  // Parametric search: each round asks for a subgraph strictly denser than
  // the incumbent; candidate densities have denominator <= n, so the strict
  // improvement chain is finite and ends at the exact maximum.
  for (;;) {
    auto better = denser_subgraph(g, density.num(), density.den());
    if (!better) break;
    Rational improved(edges_within(g, *better), better->count());
    if (!(density < improved)) throw ConsistencyError("density iteration failed to improve");
    density = improved;
    witness = *better;
  }
  return {Rational(2) * density, witness};
}

Orientation::Orientation(Graph base, std::vector<bool> toward_higher) : base_(std::move(base)) {
  if (toward_higher.size() != base_.edges().size())
    throw std::invalid_argument("direction vector does not match edge list");
  out_.assign(base_.vertex_count(), {});
  for (size_t i = 0; i < toward_higher.size(); ++i) {
    auto [u, v] = base_.edges()[i];
    if (toward_higher[i])
      out_[u].push_back(v);
    else
      out_[v].push_back(u);
  }
  for (auto& row : out_) std::sort(row.begin(), row.end());
}

bool Orientation::points(int from, int to) const {
  const auto& row = out_.at(from);
  return std::binary_search(row.begin(), row.end(), to);
}

int Orientation::max_out_degree() const {
  int d = 0;
  for (const auto& row : out_) d = std::max(d, static_cast<int>(row.size()));
  return d;
}

nlohmann::ordered_json Orientation::to_json() const {
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (auto [u, v] : base_.edges()) {
    if (points(u, v))
      arcs.push_back({u, v});
    else
      arcs.push_back({v, u});
  }
  return {{"max_outdegree", max_out_degree()}, {"arcs", arcs}};
}

WeakOrientation::WeakOrientation(Graph base, std::vector<std::pair<Rational, Rational>> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != base_.edges().size())
    throw std::invalid_argument("weight vector does not match edge list");
  for (const auto& [wuv, wvu] : weights_) {
    if (wuv < Rational(0) || wvu < Rational(0) || wuv + wvu != Rational(1))
      throw std::invalid_argument("weak orientation weights must be >= 0 and sum to 1");
  }
  out_weight_.assign(base_.vertex_count(), Rational(0));
  for (size_t i = 0; i < weights_.size(); ++i) {
    auto [u, v] = base_.edges()[i];
    out_weight_[u] += weights_[i].first;
    out_weight_[v] += weights_[i].second;
  }
}

Rational WeakOrientation::weight(int from, int to) const {
  int idx = base_.edge_index(from, to);
  if (idx < 0) throw std::invalid_argument("no such edge");
  return from < to ? weights_[idx].first : weights_[idx].second;
}

Rational WeakOrientation::max_out_weight() const {
  Rational best(0);
  for (const auto& w : out_weight_) best = rational_max(best, w);
  return best;
}

int WeakOrientation::max_out_weight_vertex() const {
  int arg = 0;
  for (int v = 1; v < base_.vertex_count(); ++v)
    if (out_weight_[v] > out_weight_[arg]) arg = v;
  return arg;
}

nlohmann::ordered_json WeakOrientation::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (size_t i = 0; i < weights_.size(); ++i) {
    auto [u, v] = base_.edges()[i];
    out.push_back({{"u", u},
                   {"v", v},
                   {"wuv", weights_[i].first.str()},
                   {"wvu", weights_[i].second.str()}});
  }
  return out;
}

Orientation min_outdegree_orientation(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<bool> toward_higher(m, true);
  if (n == 0 || m == 0) return Orientation(g, toward_higher);

  long long target = (max_average_degree(g).mad / Rational(2)).ceil();

  std::vector<int> outdeg(n, 0);
  for (auto [u, v] : g.edges()) {
    (void)v;
    ++outdeg[u];
  }
  auto points = [&](int from, int to) {
    int idx = g.edge_index(from, to);
    return from < to ? toward_higher[idx] : !toward_higher[idx];
  };
  auto flip = [&](int from, int to) {
    int idx = g.edge_index(from, to);
    toward_higher[idx] = !toward_higher[idx];
  };

  for (;;) {
    int x = -1;
    for (int v = 0; v < n; ++v)
      if (outdeg[v] > target) {
        x = v;
        break;
      }
    if (x < 0) break;

    // BFS along out-edges, neighbors in ascending id, to the first vertex
    // strictly below the target; such a vertex exists because the set
    // reachable from x has average out-degree at most mad/2 <= target.
    std::vector<int> parent(n, -1);
    parent[x] = x;
    std::deque<int> queue{x};
    int found = -1;
    while (!queue.empty() && found < 0) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (parent[w] >= 0 || !points(u, w)) continue;
        parent[w] = u;
        if (outdeg[w] < target) {
          found = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (found < 0) throw ConsistencyError("no sink for excess out-degree push");
    for (int w = found; w != x; w = parent[w]) flip(parent[w], w);
    --outdeg[x];
    ++outdeg[found];
  }

  Orientation result(g, toward_higher);
  if (result.max_out_degree() != target)
    throw ConsistencyError("orientation push ended away from ceil(mad/2)");
  return result;
}

WeakOrientation min_weak_orientation(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  if (n == 0) throw std::invalid_argument("weak orientation of the empty graph");
  if (m == 0) return WeakOrientation(g, {});

  auto [mad, witness] = max_average_degree(g);
  long long grain = witness.count();  // weights are multiples of 1/grain
  // mad = 2*edges(H)/|H| in lowest terms, so its denominator divides grain.
  long long scaled_mad = mad.num() * (grain / mad.den());

  // Scaled integer weights: fwd[i] + bwd[i] == grain per edge. Start from the
  // low-id -> high-id integer orientation.
  std::vector<long long> fwd(m, grain), bwd(m, 0);
  std::vector<long long> outw(n, 0);
  for (int i = 0; i < m; ++i) outw[g.edges()[i].first] += grain;

  auto weight_from = [&](int from, int to) {
    int idx = g.edge_index(from, to);
    return from < to ? fwd[idx] : bwd[idx];
  };
  auto shift_one = [&](int from, int to) {
    int idx = g.edge_index(from, to);
    if (from < to) {
      --fwd[idx];
      ++bwd[idx];
    } else {
      --bwd[idx];
      ++fwd[idx];
    }
    --outw[from];
    ++outw[to];
  };

  for (;;) {
    int x = -1;
    for (int v = 0; v < n; ++v)
      if (2 * outw[v] > scaled_mad) {
        x = v;
        break;
      }
    if (x < 0) break;

    std::vector<int> parent(n, -1);
    parent[x] = x;
    std::deque<int> queue{x};
    int found = -1;
    while (!queue.empty() && found < 0) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (parent[w] >= 0 || weight_from(u, w) <= 0) continue;
        parent[w] = u;
        if (2 * outw[w] < scaled_mad) {
          found = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (found < 0) throw ConsistencyError("no sink for excess weight push");
    std::vector<int> path;
    for (int w = found; w != x; w = parent[w]) path.push_back(w);
    path.push_back(x);
    std::reverse(path.begin(), path.end());
    for (size_t i = 0; i + 1 < path.size(); ++i) shift_one(path[i], path[i + 1]);
  }

  std::vector<std::pair<Rational, Rational>> weights;
  weights.reserve(m);
  for (int i = 0; i < m; ++i)
    weights.emplace_back(Rational(fwd[i], grain), Rational(bwd[i], grain));
  WeakOrientation result(g, std::move(weights));
  if (Rational(2) * result.max_out_weight() != mad)
    throw ConsistencyError("weight push ended away from mad/2");
  return result;
}

}  // namespace powercol
