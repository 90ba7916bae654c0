#include "powercol/power.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "powercol/errors.hpp"

namespace powercol {

Graph graph_power(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("power exponent must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int w = v + 1; w < g.vertex_count(); ++w)
      if (dist[w] != kUnreachable && dist[w] <= p) edges.emplace_back(v, w);
  }
  return Graph(g.vertex_count(), edges);
}

nlohmann::ordered_json PowerEdgeCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["u"] = u;
  j["v"] = v;
  j["path"] = path;
  j["s"] = s;
  j["least_vertex"] = least_vertex;
  j["least_index"] = least_index;
  j["wuv"] = wuv.str();
  j["wvu"] = wvu.str();
  return j;
}

PowerOrientationResult power_weak_orientation(const Graph& g, int p, const Ordering& sigma) {
  if (sigma.size() != g.vertex_count()) throw std::invalid_argument("ordering size mismatch");
  Graph power = graph_power(g, p);
  int n = g.vertex_count();

  // One BFS per sigma-lower endpoint; the parent of w is its smallest-id
  // neighbor one level closer, so the reconstructed path is deterministic.
  std::vector<std::vector<int>> dist(n), parent(n);
  std::vector<char> have(n, 0);
  auto ensure_tree = [&](int source) {
    if (have[source]) return;
    have[source] = 1;
    dist[source] = bfs_distances(g, source);
    parent[source].assign(n, -1);
    for (int w = 0; w < n; ++w) {
      if (w == source || dist[source][w] == kUnreachable) continue;
      for (int u : g.neighbors(w)) {
        if (dist[source][u] == dist[source][w] - 1) {
          parent[source][w] = u;  // neighbors are sorted: first hit is min id
          break;
        }
      }
    }
  };

  std::vector<PowerEdgeCertificate> certs;
  std::vector<std::pair<Rational, Rational>> weights;
  certs.reserve(power.edges().size());
  weights.reserve(power.edges().size());

  for (auto [a, b] : power.edges()) {
    int u = sigma.position(a) < sigma.position(b) ? a : b;
    int v = u == a ? b : a;
    ensure_tree(u);

    PowerEdgeCertificate cert;
    cert.u = u;
    cert.v = v;
    for (int w = v; w != u; w = parent[u][w]) cert.path.push_back(w);
    cert.path.push_back(u);
    std::reverse(cert.path.begin(), cert.path.end());
    cert.s = static_cast<int>(cert.path.size()) - 1;
    if (cert.s != dist[u][v]) throw ConsistencyError("reconstructed path is not shortest");

    cert.least_index = 0;
    for (int idx = 1; idx <= cert.s; ++idx)
      if (sigma.position(cert.path[idx]) < sigma.position(cert.path[cert.least_index]))
        cert.least_index = idx;
    cert.least_vertex = cert.path[cert.least_index];

    int du = cert.least_index;       // path distance from u to the least vertex
    int dv = cert.s - cert.least_index;
    if (du > dv) {
      cert.wuv = Rational(1);
      cert.wvu = Rational(0);
    } else if (dv > du) {
      cert.wuv = Rational(0);
      cert.wvu = Rational(1);
    } else {
      cert.wuv = Rational(1, 2);
      cert.wvu = Rational(1, 2);
    }
    // Align with the id-canonical edge pair of power.edges().
    if (a == u)
      weights.emplace_back(cert.wuv, cert.wvu);
    else
      weights.emplace_back(cert.wvu, cert.wuv);
    certs.push_back(std::move(cert));
  }

  WeakOrientation orientation(power, std::move(weights));
  return {std::move(power), std::move(orientation), std::move(certs)};
}

EdgeDecomposition decompose_power_edge(const PowerEdgeCertificate& cert, bool from_higher_end,
                                       const Graph& g, const Ordering& sigma, int p) {
  const Rational& weight = from_higher_end ? cert.wvu : cert.wuv;
  if (!(weight > Rational(0)))
    throw std::invalid_argument("decomposition requires a positively weighted end");

  std::vector<int> path = cert.path;
  if (from_higher_end) std::reverse(path.begin(), path.end());
  int s = cert.s;
  int i = from_higher_end ? s - cert.least_index : cert.least_index;
  int origin = path.front();
  int other = path.back();

  int half_up = (s + 1) / 2;
  EdgeDecomposition dec;
  dec.s = s;
  dec.i = i;
  dec.h = i <= half_up ? 0 : i - half_up;
  dec.u_h = path[dec.h];

  if (dec.h < 0 || dec.h > p / 2)
    throw ConsistencyError("decomposition hop count out of range");
  auto from_origin = bfs_distances(g, origin);
  if (from_origin[dec.u_h] != dec.h)
    throw ConsistencyError("anchor vertex not at hop distance from the weighted end");
  VertexSet reach = weak_reach_set(g, sigma, Depth::finite(half_up), dec.u_h);
  if (!reach.contains(cert.least_vertex))
    throw ConsistencyError("least vertex not weakly reachable from the anchor");
  auto from_least = bfs_distances(g, cert.least_vertex);
  if (from_least[other] != s - i)
    throw ConsistencyError("far end not at the residual distance from the least vertex");
  return dec;
}

namespace {

Rational geometric_sum(int base, int terms_up_to) {
  Rational sum(0);
  Rational pow(1);
  for (int j = 0; j <= terms_up_to; ++j) {
    sum += pow;
    pow *= Rational(base);
  }
  return sum;
}

Rational int_pow(int base, int exp) {
  Rational r(1);
  for (int i = 0; i < exp; ++i) r *= Rational(base);
  return r;
}

}  // namespace

Rational power_closed_form_bound(int delta, int p, int q) {
  if (delta < 3) throw std::domain_error("bound requires max degree >= 3");
  if (p < 1) throw std::invalid_argument("power exponent must be >= 1");
  return Rational(delta, delta - 2) * Rational((p + 1) / 2) * Rational(q) *
         int_pow(delta - 1, p / 2);
}

Rational power_intermediate_bound(int delta, int p, int q) {
  if (delta < 3) throw std::domain_error("bound requires max degree >= 3");
  if (p < 1) throw std::invalid_argument("power exponent must be >= 1");
  int half = p / 2;
  Rational total = Rational(q, 2) * geometric_sum(delta - 1, half);
  for (int h = 1; h <= half; ++h)
    total += Rational(delta) * int_pow(delta - 1, h - 1) * Rational(q) *
             geometric_sum(delta - 1, half - h);
  return total;
}

VerificationReport verify_power_bound(const Graph& g, int p, const Ordering& sigma,
                                      const PowerBoundOptions& options) {
  int delta = g.max_degree();
  if (delta < 3)
    throw std::domain_error("power bound verification requires max degree >= 3, got " +
                            std::to_string(delta));
  if (p < 1) throw std::invalid_argument("power exponent must be >= 1");

  int q = wcol_of_ordering(g, sigma, Depth::finite((p + 1) / 2)).value;
  auto result = power_weak_orientation(g, p, sigma);
  Rational bound = power_closed_form_bound(delta, p, q);
  Rational max_weight = result.orientation.max_out_weight();
  int attaining = result.orientation.max_out_weight_vertex();

  bool pass = max_weight <= bound;
  nlohmann::ordered_json details;
  details["delta"] = delta;
  details["p"] = p;
  details["q"] = q;
  details["sigma"] = options.sigma_label;
  details["bound"] = bound.str();
  details["max_out_weight"] = max_weight.str();
  details["attaining_vertex"] = attaining;

  if (g.vertex_count() <= options.mad_check_max_n && g.vertex_count() > 0) {
    Rational power_mad = max_average_degree(result.power).mad;
    bool mad_ok = power_mad <= Rational(2) * bound;
    details["power_mad"] = power_mad.str();
    details["power_mad_ok"] = mad_ok;
    pass = pass && mad_ok;
  }
  return VerificationReport::make("thm24.out-weight", pass, std::move(details));
}

}  // namespace powercol
