#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powercol/rational.hpp"

namespace powercol {

/// One evaluated closed-form bound.
struct BoundExpression {
  std::string name;
  nlohmann::ordered_json params;
  Rational value;

  nlohmann::ordered_json to_json() const;
};

/// The five wcol_k upper-bound formulas, by graph-class hypothesis.
enum class WcolBoundVariant {
  TreeWidth,       // binom(k+t, t), tw(G) <= t
  KtMinorFree,     // binom(k+t-2, t-2)(t-3)(2k+1) - k(t-3), t >= 4
  Genus,           // (2g + binom(k+2,2))(2k+1) - k
  Planar,          // binom(k+2,2)(2k+1) - k
  CompleteJoin,    // s(t-1) binom(k+s, s)(2k+1), K*_{s,t}-minor-free
};

struct WcolBoundParams {
  int t = 0;      // tree-width bound or join part size
  int genus = 0;  // for the genus variant
  int s = 0;      // for the complete-join variant
};

long long wcol_bound(WcolBoundVariant variant, const WcolBoundParams& params, int k);

/// floor(sqrt((91p-118)/384) * (delta+1)^((p+1)/2)) + delta + 1, evaluated in
/// exact integer arithmetic (the floor of the square root of a rational is
/// computed by integer square root on the scaled numerator). Requires
/// 91p >= 118 and delta >= 2.
long long chordal_power_bound(int delta, int p);

/// 2^{p+1} * arb^{ceil(p/2)} * delta^{floor(p/2)}.
long long arboricity_power_bound(int delta, int p, int arb);

/// Order of the maximal tree with max degree delta and height floor(p/2):
/// (delta*(delta-1)^{floor(p/2)} - 2) / (delta-2). Requires delta >= 3.
long long tree_lower_bound(int delta, int p);

struct PowerBoundsExtra {
  int arb = 1;  // arboricity used by the arboricity-power formula
  int q = 1;    // wcol_{ceil(p/2)} value used by the weak-orientation formula
};

/// Evaluates all four power-related bound formulas at the given parameters.
std::vector<BoundExpression> power_bounds(int delta, int p, const PowerBoundsExtra& extra);

/// Evaluates the four comparator formulas for the square of a graph with
/// 2k-2 < mad <= 2k (the list-coloring entry additionally carries its own
/// hypothesis mad < 4 - 1/c, delta >= 14c - 7, recorded in the params).
std::vector<BoundExpression> square_bounds(int k, int delta, std::optional<int> c = std::nullopt);

/// One row of the ratio table: each power-bound formula divided by the tree
/// lower bound L, and the square of the chordal ratio's lower estimate
/// (stored squared so the value stays rational).
struct RatioRow {
  int p = 0;
  int q = 0;                                    // q used by the weak-orientation column
  std::optional<Rational> chordal_over_tree;    // n/a below the formula's domain
  Rational weak_orientation_over_tree;
  std::optional<Rational> chordal_estimate_sq;  // lower estimate of the ratio, squared

  nlohmann::ordered_json to_json() const;
};

/// Rows for p in [p_min, p_max]. The q per row defaults to the planar wcol
/// bound at radius ceil(p/2).
std::vector<RatioRow> ratio_table(int delta, int p_min, int p_max);

}  // namespace powercol
