#include "powercol/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

#include "powercol/errors.hpp"

namespace powercol {

namespace {

void require_n(const Graph& g, int limit, const char* what) {
  if (g.vertex_count() > limit)
    throw LimitError(std::string(what) + " oracle refused: n = " +
                     std::to_string(g.vertex_count()) + " exceeds limit " + std::to_string(limit));
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
  std::vector<uint32_t> adj(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v)) adj[v] |= uint32_t{1} << w;
  return adj;
}

long long edges_in_mask(const std::vector<uint32_t>& adj, uint32_t mask) {
  long long twice = 0;
  for (uint32_t s = mask; s;) {
    int v = std::countr_zero(s);
    s &= s - 1;
    twice += std::popcount(adj[v] & mask);
  }
  return twice / 2;
}

}  // namespace

OracleLimits OracleLimits::defaults() {
  OracleLimits limits;
  if (const char* env = std::getenv("POWERCOL_EXACT_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) {
      limits.mad_arb_n = v;
      limits.treedepth_n = v;
      limits.chromatic_n = v;
      limits.wcol_n = v;
    }
  }
  return limits;
}

Rational mad_oracle(const Graph& g, const OracleLimits& limits) {
  require_n(g, limits.mad_arb_n, "mad");
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mad of the empty graph");
  auto adj = adjacency_masks(g);
  long long best_num = 0, best_den = 1;
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    long long e = edges_in_mask(adj, mask);
    long long s = std::popcount(mask);
    if (2 * e * best_den > best_num * s) {
      best_num = 2 * e;
      best_den = s;
    }
  }
  return Rational(best_num, best_den);
}

int arboricity_oracle(const Graph& g, const OracleLimits& limits) {
  require_n(g, limits.mad_arb_n, "arboricity");
  int n = g.vertex_count();
  auto adj = adjacency_masks(g);
  long long best = 0;
  for (uint32_t mask = 1; n > 0 && mask < (uint32_t{1} << n); ++mask) {
    int s = std::popcount(mask);
    if (s < 2) continue;
    long long e = edges_in_mask(adj, mask);
    best = std::max(best, (e + s - 2) / (s - 1));
  }
  return static_cast<int>(best);
}

namespace {

struct TreedepthSolver {
  std::vector<uint32_t> adj;
  std::vector<int> memo;

  uint32_t component_of(uint32_t mask, int v) const {
    uint32_t comp = uint32_t{1} << v;
    uint32_t frontier = comp;
    while (frontier) {
      uint32_t grown = 0;
      for (uint32_t f = frontier; f;) {
        int w = std::countr_zero(f);
        f &= f - 1;
        grown |= adj[w] & mask;
      }
      grown &= ~comp;
      comp |= grown;
      frontier = grown;
    }
    return comp;
  }

  int solve(uint32_t mask) {
    if (mask == 0) return 0;
    int& slot = memo[mask];
    if (slot >= 0) return slot;
    int result;
    uint32_t comp = component_of(mask, std::countr_zero(mask));
    if (comp != mask) {
      result = std::max(solve(comp), solve(mask & ~comp));
    } else if (std::popcount(mask) == 1) {
      result = 1;
    } else {
      result = INT32_MAX;
      for (uint32_t s = mask; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        result = std::min(result, 1 + solve(mask & ~(uint32_t{1} << v)));
      }
    }
    return slot = result;
  }
};

}  // namespace

int treedepth_oracle(const Graph& g, const OracleLimits& limits) {
  require_n(g, limits.treedepth_n, "treedepth");
  int n = g.vertex_count();
  if (n == 0) return 0;
  TreedepthSolver solver;
  solver.adj = adjacency_masks(g);
  solver.memo.assign(size_t{1} << n, -1);
  return solver.solve((uint32_t{1} << n) - 1);
}

namespace {

bool colorable(const Graph& g, const std::vector<int>& order, int colors) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  // Backtracking with color-class symmetry pruning: a vertex may open at
  // most one new color beyond those already in use.
  std::vector<int> used_at(n + 1, 0);
  int idx = 0;
  std::vector<int> choice(n, -1);
  used_at[0] = 0;
  while (true) {
    if (idx == n) return true;
    int v = order[idx];
    int limit = std::min(colors - 1, used_at[idx]);
    int c = choice[idx] + 1;
    bool advanced = false;
    for (; c <= limit; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (ok) {
        choice[idx] = c;
        color[v] = c;
        used_at[idx + 1] = std::max(used_at[idx], c + 1);
        ++idx;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    choice[idx] = -1;
    color[v] = -1;
    if (idx == 0) return false;
    --idx;
    color[order[idx]] = -1;
  }
}

}  // namespace

int chromatic_oracle(const Graph& g, const OracleLimits& limits) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  long long all = static_cast<long long>(n) * (n - 1) / 2;
  if (g.edge_count() == all) return n;  // clique short-circuit, any size
  require_n(g, limits.chromatic_n, "chromatic");
  if (g.edge_count() == 0) return 1;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&g](int a, int b) { return g.degree(a) > g.degree(b); });

  // Greedy clique along the degree order as a lower bound.
  int lb = 1;
  {
    std::vector<int> clique;
    for (int v : order) {
      bool fits = true;
      for (int u : clique)
        if (!g.has_edge(u, v)) {
          fits = false;
          break;
        }
      if (fits) clique.push_back(v);
    }
    lb = std::max<int>(2, static_cast<int>(clique.size()));
  }

  for (int c = lb; c < n; ++c)
    if (colorable(g, order, c)) return c;
  return n;
}

int wcol_exhaustive_oracle(const Graph& g, Depth k, const OracleLimits& limits) {
  require_n(g, limits.wcol_n, "wcol-exhaustive");
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 16) throw LimitError("wcol-exhaustive oracle supports at most 16 vertices");
  int cap = k.capped(n);
  auto adj = adjacency_masks(g);
  uint32_t full = (uint32_t{1} << n) - 1;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  std::vector<int> cnt(n);
  do {
    std::fill(cnt.begin(), cnt.end(), 0);
    uint32_t allowed = full;
    int worst = 0;
    bool abandoned = false;
    for (int r = 0; r < n && !abandoned; ++r) {
      int y = perm[r];
      uint32_t visited = uint32_t{1} << y;
      uint32_t frontier = visited;
      for (int step = 0; step < cap && frontier; ++step) {
        uint32_t grown = 0;
        for (uint32_t f = frontier; f;) {
          int w = std::countr_zero(f);
          f &= f - 1;
          grown |= adj[w];
        }
        grown &= allowed & ~visited;
        visited |= grown;
        frontier = grown;
      }
      for (uint32_t s = visited; s;) {
        int x = std::countr_zero(s);
        s &= s - 1;
        worst = std::max(worst, ++cnt[x]);
        if (worst >= best) {  // this ordering cannot improve the minimum
          abandoned = true;
          break;
        }
      }
      allowed &= ~(uint32_t{1} << y);
    }
    if (!abandoned) best = worst;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

bool orientable_within(const Graph& g, size_t edge, int target, std::vector<int>& outdeg) {
  if (edge == g.edges().size()) return true;
  auto [u, v] = g.edges()[edge];
  if (outdeg[u] < target) {
    ++outdeg[u];
    if (orientable_within(g, edge + 1, target, outdeg)) return true;
    --outdeg[u];
  }
  if (outdeg[v] < target) {
    ++outdeg[v];
    if (orientable_within(g, edge + 1, target, outdeg)) return true;
    --outdeg[v];
  }
  return false;
}

}  // namespace

int min_outdegree_oracle(const Graph& g, const OracleLimits& limits) {
  if (g.edge_count() > limits.orientation_m)
    throw LimitError("orientation oracle refused: m = " + std::to_string(g.edge_count()) +
                     " exceeds limit " + std::to_string(limits.orientation_m));
  if (g.edge_count() == 0) return 0;
  for (int target = 1;; ++target) {
    std::vector<int> outdeg(g.vertex_count(), 0);
    if (orientable_within(g, 0, target, outdeg)) return target;
  }
}

}  // namespace powercol
