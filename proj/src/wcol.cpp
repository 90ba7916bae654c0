#include "powercol/wcol.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "powercol/errors.hpp"
#include "powercol/oracles.hpp"

namespace powercol {

VertexSet weak_reach_set(const Graph& g, const Ordering& sigma, Depth k, int x) {
  int n = g.vertex_count();
  if (x < 0 || x >= n) throw std::invalid_argument("vertex out of range");
  if (sigma.size() != n) throw std::invalid_argument("ordering size mismatch");
  int cap = k.capped(n);

  // best[v] = over walks from x to v of length <= step, the largest
  // achievable minimum position among the walk's vertices other than v.
  // NONE marks "no walk yet"; TOP is the empty-walk bound.
  const int NONE = -1;
  const int TOP = n;
  std::vector<int> best(n, NONE), next(n);
  best[x] = TOP;
  for (int step = 0; step < cap; ++step) {
    next = best;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      for (int u : g.neighbors(v)) {
        if (best[u] == NONE) continue;
        int cand = std::min(best[u], sigma.position(u));
        if (cand > next[v]) {
          next[v] = cand;
          changed = true;
        }
      }
    }
    best.swap(next);
    if (!changed) break;
  }

  VertexSet out(n);
  for (int y = 0; y < n; ++y)
    if (best[y] != NONE && best[y] >= sigma.position(y)) out.insert(y);
  return out;
}

OrderingScore wcol_of_ordering(const Graph& g, const Ordering& sigma, Depth k) {
  int n = g.vertex_count();
  if (sigma.size() != n) throw std::invalid_argument("ordering size mismatch");
  int cap = k.capped(n);

  // For each y in sigma order, a BFS restricted to positions >= pos(y)
  // reaches exactly the x with y in W^k[x].
  std::vector<int> cnt(n, 0);
  std::vector<int> dist(n);
  for (int r = 0; r < n; ++r) {
    int y = sigma.vertex_at(r);
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[y] = 0;
    ++cnt[y];
    std::deque<int> queue{y};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (dist[u] == cap) continue;
      for (int w : g.neighbors(u)) {
        if (dist[w] != kUnreachable || sigma.position(w) < r) continue;
        dist[w] = dist[u] + 1;
        ++cnt[w];
        queue.push_back(w);
      }
    }
  }

  OrderingScore score;
  score.reach_sizes = cnt;
  for (int v = 0; v < n; ++v) {
    if (cnt[v] > score.value) {
      score.value = cnt[v];
      score.argmax_vertex = v;
    }
  }
  return score;
}

ColResult coloring_number(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<int> order(n);
  int value = n > 0 ? 1 : 0;
  for (int slot = n - 1; slot >= 0; --slot) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    value = std::max(value, deg[pick] + 1);
    order[slot] = pick;
    removed[pick] = 1;
    for (int w : g.neighbors(pick))
      if (!removed[w]) --deg[w];
  }
  return {value, Ordering::from_rank_list(order)};
}

int exact_search_limit() {
  if (const char* env = std::getenv("POWERCOL_EXACT_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

namespace {

// Branch-and-bound over ordering prefixes, built left to right. When a
// vertex v is placed, the set of vertices it will be weakly reachable from
// is exactly the radius-k ball around v in the graph induced by the not yet
// placed vertices, so per-vertex reach counts can be accumulated
// incrementally and give monotone lower bounds for pruning.
struct ExactSearch {
  int n = 0;
  int cap = 0;
  uint64_t full = 0;
  std::vector<uint64_t> adj;
  std::vector<int> static_order;  // ascending (degree, id)
  int lower = 0;                  // col(G) <= wcol_k(G)

  int best = 0;
  std::vector<int> best_order;
  std::vector<int> c;       // contributions accumulated so far
  std::vector<int> prefix;  // placed vertices in order
  uint64_t placed = 0;

  uint64_t reach_from(int v, uint64_t allowed) const {
    uint64_t visited = uint64_t{1} << v;
    uint64_t frontier = visited;
    for (int step = 0; step < cap && frontier; ++step) {
      uint64_t grown = 0;
      for (uint64_t f = frontier; f;) {
        int w = std::countr_zero(f);
        f &= f - 1;
        grown |= adj[w];
      }
      grown &= allowed & ~visited;
      visited |= grown;
      frontier = grown;
    }
    return visited;
  }

  void dfs(int max_so_far) {
    if (best <= lower) return;
    if (placed == full) {
      if (max_so_far < best) {
        best = max_so_far;
        best_order = prefix;
      }
      return;
    }

    uint64_t unplaced = full & ~placed;
    int lb = max_so_far;
    for (uint64_t u = unplaced; u;) {
      int x = std::countr_zero(u);
      u &= u - 1;
      lb = std::max(lb, c[x] + 1);  // placing x later can only cost more
    }
    if (lb >= best) return;

    int tried[64];
    int tried_count = 0;
    for (int v : static_order) {
      if (placed >> v & 1) continue;
      bool twin = false;
      for (int t = 0; t < tried_count && !twin; ++t) {
        int u = tried[t];
        twin = (adj[u] & ~(uint64_t{1} << v)) == (adj[v] & ~(uint64_t{1} << u));
      }
      if (twin) continue;
      tried[tried_count++] = v;

      uint64_t gained = reach_from(v, unplaced) & ~(uint64_t{1} << v);
      placed |= uint64_t{1} << v;
      prefix.push_back(v);
      for (uint64_t it = gained; it;) {
        int x = std::countr_zero(it);
        it &= it - 1;
        ++c[x];
      }
      dfs(std::max(max_so_far, c[v] + 1));
      for (uint64_t it = gained; it;) {
        int x = std::countr_zero(it);
        it &= it - 1;
        --c[x];
      }
      prefix.pop_back();
      placed &= ~(uint64_t{1} << v);
      if (best <= lower) return;
    }
  }
};

}  // namespace

WcolExactResult wcol_exact(const Graph& g, Depth k, std::optional<int> limit) {
  int lim = limit.value_or(exact_search_limit());
  int n = g.vertex_count();
  if (n > lim)
    throw LimitError("exact wcol search refused: n = " + std::to_string(n) + " exceeds limit " +
                     std::to_string(lim) + " (use the heuristic ordering instead)");
  if (n > 64) throw LimitError("exact wcol search supports at most 64 vertices");
  if (n == 0) return {0, Ordering::identity(0)};

  Ordering incumbent = wcol_heuristic(g, k);
  int incumbent_value = wcol_of_ordering(g, incumbent, k).value;

  ExactSearch search;
  search.n = n;
  search.cap = k.capped(n);
  search.full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  search.adj.assign(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) search.adj[v] |= uint64_t{1} << w;
  search.static_order.resize(n);
  for (int v = 0; v < n; ++v) search.static_order[v] = v;
  std::stable_sort(search.static_order.begin(), search.static_order.end(),
                   [&g](int a, int b) { return g.degree(a) < g.degree(b); });
  search.lower = coloring_number(g).value;
  search.best = incumbent_value;
  search.best_order = incumbent.rank_list();
  search.c.assign(n, 0);
  search.dfs(0);

  return {search.best, Ordering::from_rank_list(search.best_order)};
}

Ordering wcol_heuristic(const Graph& g, Depth k) {
  int n = g.vertex_count();
  int cap = k.capped(n);
  std::vector<char> removed(n, 0);
  std::vector<int> order(n);

  std::vector<int> dist(n);
  auto ball = [&](int v, std::vector<int>* out) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[v] = 0;
    std::deque<int> queue{v};
    int size = 1;
    if (out) out->push_back(v);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (dist[u] == cap) continue;
      for (int w : g.neighbors(u)) {
        if (removed[w] || dist[w] != kUnreachable) continue;
        dist[w] = dist[u] + 1;
        ++size;
        if (out) out->push_back(w);
        queue.push_back(w);
      }
    }
    return size;
  };

  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> score(n, 0);
  for (int v = 0; v < n; ++v) score[v] = ball(v, nullptr);

  // Remove the vertex with the smallest remaining-graph ball; ties fall back
  // to remaining degree, then id. The degree tie-break matters on highly
  // symmetric graphs where every radius-k ball is the whole component.
  auto better = [&](int a, int b) {
    if (score[a] != score[b]) return score[a] < score[b];
    if (degree[a] != degree[b]) return degree[a] < degree[b];
    return a < b;
  };

  for (int slot = n - 1; slot >= 0; --slot) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (pick < 0 || better(v, pick))) pick = v;
    order[slot] = pick;
    std::vector<int> affected;
    ball(pick, &affected);  // balls change only within pick's own ball
    removed[pick] = 1;
    for (int w : g.neighbors(pick))
      if (!removed[w]) --degree[w];
    for (int v : affected)
      if (!removed[v]) score[v] = ball(v, nullptr);
  }
  return Ordering::from_rank_list(order);
}

VerificationReport treedepth_equals_wcol_inf_check(const Graph& g) {
  auto exact = wcol_exact(g, Depth::infinite());
  int td = treedepth_oracle(g);
  nlohmann::ordered_json details;
  details["n"] = g.vertex_count();
  details["treedepth"] = td;
  details["wcol_inf"] = exact.value;
  details["witness"] = exact.witness.rank_list();
  return VerificationReport::make("wcol.inf-equals-treedepth", exact.value == td,
                                  std::move(details));
}

}  // namespace powercol
