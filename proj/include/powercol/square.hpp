#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "powercol/density.hpp"
#include "powercol/graph.hpp"
#include "powercol/report.hpp"

namespace powercol {

/// Shortest-path sign classes around one vertex of an oriented graph.
/// A distance-2 vertex may appear in several two-symbol classes when
/// different shortest paths realize different sign patterns.
struct SignNeighborhoods {
  VertexSet plus;         // out-neighbors
  VertexSet minus;        // in-neighbors
  VertexSet plus_plus;    // distance 2 via x -> m -> y
  VertexSet plus_minus;   // x -> m <- y
  VertexSet minus_plus;   // x <- m -> y
  VertexSet minus_minus;  // x <- m <- y

  VertexSet out_reach() const { return plus | plus_plus; }    // N^{+,++}
  VertexSet in_reach() const { return minus | minus_minus; }  // N^{-,--}
  int d_plus() const { return plus.count(); }
  /// d^{+,++} = d^+ + d^{++}; the two classes live at distances 1 and 2 and
  /// are disjoint, so this equals |N^{+,++}|.
  int d_out_reach() const { return plus.count() + plus_plus.count(); }
};

SignNeighborhoods sign_neighborhoods(const Graph& g, const Orientation& orient, int x);

struct TraceEvent {
  enum class Kind { Contribute, Collect };
  Kind kind = Kind::Collect;
  int vertex = -1;   // the acting vertex
  int partner = -1;  // receiver, for contributions
  int step = 0;

  nlohmann::ordered_json to_json() const;
};

struct HarmoniousResult {
  Ordering sigma;                 // collection order
  std::vector<TraceEvent> trace;  // every contribution and collection
};

/// The collection procedure, run verbatim: the outer loop picks the L-least
/// uncollected vertex; the inner loop hands control along contributions,
/// collecting a vertex the moment its pending set empties.
HarmoniousResult harmonious_square_order(const Graph& g, const Orientation& orient,
                                         const Ordering& L);

/// Replays a trace and checks the three counting claims behind the square
/// bound: a collected vertex contributed to all its uncollected out-reach,
/// nobody receives more than d^{+,++} contributions, and collected in-reach
/// is dominated by contributions received.
VerificationReport check_contribution_claims(const std::vector<TraceEvent>& trace, const Graph& g,
                                             const Orientation& orient);

/// End-to-end check of the square bound: computes mad, derives the unique k
/// with 2k-2 < mad <= 2k, orients with max out-degree <= k, runs the
/// collection, and checks every vertex's closed back-neighborhood in G^2
/// against (2k-1)*Delta + 2k + 1, plus a greedy coloring of G^2 along the
/// produced order.
VerificationReport verify_square_bound(const Graph& g, const Ordering& L);
VerificationReport verify_square_bound(const Graph& g);

}  // namespace powercol
