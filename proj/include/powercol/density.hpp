#pragma once

#include <vector>

#include <json.hpp>

#include "powercol/graph.hpp"
#include "powercol/rational.hpp"

namespace powercol {

struct MadResult {
  Rational mad;       // max over nonempty subgraphs H of 2*edges(H)/|H|
  VertexSet witness;  // vertex set inducing a subgraph that attains it
};

/// Exact maximum average degree, computed by parametric max-flow over the
/// candidate densities (rationals with denominator <= n). Throws on an empty
/// graph.
MadResult max_average_degree(const Graph& g);

/// 0/1 orientation of every edge of a graph.
class Orientation {
 public:
  Orientation() = default;
  /// toward_higher is aligned with base.edges(): true orients u->v for the
  /// stored pair (u, v) with u < v.
  Orientation(Graph base, std::vector<bool> toward_higher);

  const Graph& base() const { return base_; }
  bool points(int from, int to) const;
  int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
  int max_out_degree() const;
  const std::vector<int>& out_neighbors(int v) const { return out_.at(v); }

  nlohmann::ordered_json to_json() const;

 private:
  Graph base_;
  std::vector<std::vector<int>> out_;  // sorted
};

/// Rational weights on both directions of every edge, summing to 1 per edge.
class WeakOrientation {
 public:
  WeakOrientation() = default;
  /// weights[i] = (w(u->v), w(v->u)) for base.edges()[i] = (u, v).
  /// Validates the type invariants (nonnegative, pairwise sum 1).
  WeakOrientation(Graph base, std::vector<std::pair<Rational, Rational>> weights);

  const Graph& base() const { return base_; }
  Rational weight(int from, int to) const;
  Rational out_weight(int v) const { return out_weight_.at(v); }
  Rational max_out_weight() const;
  /// Smallest vertex attaining the maximum out-weight.
  int max_out_weight_vertex() const;

  nlohmann::ordered_json to_json() const;

 private:
  Graph base_;
  std::vector<std::pair<Rational, Rational>> weights_;
  std::vector<Rational> out_weight_;
};

/// Orientation with max out-degree exactly ceil(mad/2), obtained by the
/// excess-pushing procedure: while some vertex exceeds the target, reverse a
/// directed path to a vertex below it.
Orientation min_outdegree_orientation(const Graph& g);

/// Weak orientation with 2 * max out-weight = mad(G) exactly. All weights are
/// multiples of 1/|H| for the witness H of max_average_degree; starts from an
/// integer orientation and shifts 1/|H| units of weight along paths of
/// positive forward weight.
WeakOrientation min_weak_orientation(const Graph& g);

}  // namespace powercol
