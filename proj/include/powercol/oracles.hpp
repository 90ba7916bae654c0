#pragma once

#include "powercol/graph.hpp"
#include "powercol/rational.hpp"
#include "powercol/wcol.hpp"

namespace powercol {

/// Per-oracle input caps. Oracles refuse inputs above their limits instead of
/// attempting them; a silently degrading oracle is worse than none.
struct OracleLimits {
  int mad_arb_n = 12;
  int treedepth_n = 12;
  int chromatic_n = 12;
  int wcol_n = 8;
  int orientation_m = 20;

  /// Defaults, with POWERCOL_EXACT_LIMIT applied to the vertex-count limits.
  static OracleLimits defaults();
};

/// max over nonempty vertex subsets S of 2*edges(S)/|S|, by enumeration.
Rational mad_oracle(const Graph& g, const OracleLimits& limits = OracleLimits::defaults());

/// Nash-Williams maximum ceil(edges(S)/(|S|-1)) over subsets with >= 2 vertices.
int arboricity_oracle(const Graph& g, const OracleLimits& limits = OracleLimits::defaults());

/// Tree-depth by the standard recursion (1 + min over vertex deletions, max
/// over components), memoized on vertex-subset bitmasks.
int treedepth_oracle(const Graph& g, const OracleLimits& limits = OracleLimits::defaults());

/// Exact chromatic number by iterative-deepening backtracking with symmetry
/// pruning on color classes. Complete graphs short-circuit to n at any size.
int chromatic_oracle(const Graph& g, const OracleLimits& limits = OracleLimits::defaults());

/// Exact wcol_k as the minimum over all n! orderings, no pruning of the
/// ordering enumeration.
int wcol_exhaustive_oracle(const Graph& g, Depth k,
                           const OracleLimits& limits = OracleLimits::defaults());

/// Minimum over all orientations of the maximum out-degree, by complete
/// search over edge directions.
int min_outdegree_oracle(const Graph& g, const OracleLimits& limits = OracleLimits::defaults());

}  // namespace powercol
