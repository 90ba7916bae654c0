#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powercol/density.hpp"
#include "powercol/graph.hpp"
#include "powercol/rational.hpp"
#include "powercol/report.hpp"
#include "powercol/wcol.hpp"

namespace powercol {

/// G^p: same vertices, an edge for every pair at distance 1..p in G.
Graph graph_power(const Graph& g, int p);

/// Audit record for one edge of G^p: the chosen shortest path, its least
/// vertex under sigma, and the weights the rule assigned.
struct PowerEdgeCertificate {
  int u = -1;              // sigma-lower end
  int v = -1;              // sigma-higher end
  std::vector<int> path;   // shortest u,v-path in G, from u to v
  int s = 0;               // path length = dist_G(u, v)
  int least_vertex = -1;   // sigma-least vertex on the path
  int least_index = 0;     // its index, counted from the u end
  Rational wuv;            // weight assigned to u -> v
  Rational wvu;            // weight assigned to v -> u

  nlohmann::ordered_json to_json() const;
};

struct PowerOrientationResult {
  Graph power;
  WeakOrientation orientation;
  std::vector<PowerEdgeCertificate> certificates;  // in power.edges() order
};

/// Weak orientation of G^p from the constructive rule: per power edge pick a
/// deterministic shortest path (BFS from the sigma-lower end, smallest-id
/// parents, reconstructed from the sigma-higher end); the unique end at
/// path-distance >= s/2 from the sigma-least path vertex gets out-weight 1,
/// or both ends get 1/2 when the distances tie.
PowerOrientationResult power_weak_orientation(const Graph& g, int p, const Ordering& sigma);

struct EdgeDecomposition {
  int h = 0;    // hop count to the anchor vertex
  int u_h = -1; // anchor: path vertex at index h from the weighted end
  int i = 0;    // index of the least vertex from the weighted end
  int s = 0;    // path length
};

/// Decomposes a positively weighted certificate end and machine-checks the
/// four conditions that make the out-weight accounting work:
/// 0 <= h <= p/2, u_h at distance h, the least vertex weakly
/// ceil(s/2)-reachable from u_h, and the far end at distance s-i from it.
/// Throws ConsistencyError if any condition fails.
EdgeDecomposition decompose_power_edge(const PowerEdgeCertificate& cert, bool from_higher_end,
                                       const Graph& g, const Ordering& sigma, int p);

/// Closed-form per-vertex out-weight bound: (d/(d-2)) * floor((p+1)/2) * q *
/// (d-1)^floor(p/2). Requires delta >= 3.
Rational power_closed_form_bound(int delta, int p, int q);

/// Tighter intermediate out-weight budget: q/2 * sum_j (d-1)^j plus the
/// anchored double sum over h >= 1. Meaningful for p >= 2.
Rational power_intermediate_bound(int delta, int p, int q);

struct PowerBoundOptions {
  std::string sigma_label = "supplied";  // recorded in the report
  int mad_check_max_n = 64;              // exact mad of G^p is checked up to here
};

/// Builds the weak orientation of G^p for the supplied ordering and checks
/// the out-weight bound per vertex, plus mad(G^p) <= 2 * bound where exact
/// mad is computed. Refuses graphs with max degree <= 2.
VerificationReport verify_power_bound(const Graph& g, int p, const Ordering& sigma,
                                      const PowerBoundOptions& options = {});

}  // namespace powercol
