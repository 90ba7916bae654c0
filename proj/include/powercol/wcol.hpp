#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powercol/graph.hpp"
#include "powercol/report.hpp"

namespace powercol {

/// Reach radius k for weak reachability; infinity is an explicit symbol.
/// Internally every search caps the radius at n-1, where it stabilizes.
class Depth {
 public:
  static Depth finite(int k) {
    if (k < 1) throw std::invalid_argument("depth must be >= 1");
    return Depth(k, false);
  }
  static Depth infinite() { return Depth(0, true); }

  bool is_infinite() const { return infinite_; }
  int finite_value() const {
    if (infinite_) throw std::logic_error("infinite depth has no finite value");
    return k_;
  }
  /// Effective search depth on an n-vertex graph.
  int capped(int n) const {
    int cap = n > 0 ? n - 1 : 0;
    return infinite_ ? cap : std::min(k_, cap);
  }
  std::string str() const { return infinite_ ? "inf" : std::to_string(k_); }

  bool operator==(const Depth&) const = default;

 private:
  Depth(int k, bool inf) : k_(k), infinite_(inf) {}
  int k_;
  bool infinite_;
};

/// Result of evaluating one ordering: the max weak-reach set size, the
/// smallest vertex attaining it, and all per-vertex sizes.
struct OrderingScore {
  int value = 0;
  int argmax_vertex = -1;
  std::vector<int> reach_sizes;
};

/// W_sigma^k[x]: vertices y <= x (in sigma) reachable from x by a path of
/// length <= k lying entirely at or right of y. Computed by a depth-limited
/// relaxation that tracks, per vertex and remaining depth, the best
/// achievable left bound of a walk from x.
VertexSet weak_reach_set(const Graph& g, const Ordering& sigma, Depth k, int x);

/// max_x |W_sigma^k[x]| for the given ordering.
OrderingScore wcol_of_ordering(const Graph& g, const Ordering& sigma, Depth k);

struct ColResult {
  int value = 0;
  Ordering witness;
};

/// Exact coloring number via the smallest-last (degeneracy) ordering, which
/// is optimal for radius 1. Ties broken by smallest id.
ColResult coloring_number(const Graph& g);

/// Default cap for exact ordering search; overridable via the
/// POWERCOL_EXACT_LIMIT environment variable.
int exact_search_limit();

struct WcolExactResult {
  int value = 0;
  Ordering witness;
};

/// Exact wcol_k by branch-and-bound over ordering prefixes (left to right),
/// pruning when the partial maximum already meets the incumbent. Refuses
/// graphs above the limit (default exact_search_limit()).
WcolExactResult wcol_exact(const Graph& g, Depth k,
                           std::optional<int> limit = std::nullopt);

/// Generalized smallest-last: repeatedly removes the vertex minimizing the
/// size of its radius-k ball in the remaining graph (ties by id). For k = 1
/// this is exactly the degeneracy ordering.
Ordering wcol_heuristic(const Graph& g, Depth k);

/// Machine check that wcol with unbounded radius equals tree-depth
/// (computed independently by the brute-force oracle).
VerificationReport treedepth_equals_wcol_inf_check(const Graph& g);

}  // namespace powercol
