#include "powercol/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace powercol {

namespace {

using i128 = __int128;

long long checked(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("bound value overflow");
  return static_cast<long long>(v);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > INT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<long long>(result);
}

i128 ipow128(long long base, int exp) {
  i128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > i128(1) << 100) throw std::overflow_error("power overflow");
  }
  return r;
}

long long ipow(long long base, int exp) { return checked(ipow128(base, exp)); }

// floor(sqrt(x)) for a 128-bit nonnegative integer.
i128 isqrt128(i128 x) {
  if (x < 0) throw std::domain_error("isqrt of negative");
  if (x < 2) return x;
  i128 lo = 0, hi = i128(1) << 64;
  while (lo + 1 < hi) {
    i128 mid = (lo + hi) / 2;
    if (mid * mid <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

nlohmann::ordered_json BoundExpression::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["params"] = params;
  if (value.is_integer())
    j["value"] = value.num();
  else
    j["value"] = value.str();
  return j;
}

long long wcol_bound(WcolBoundVariant variant, const WcolBoundParams& params, int k) {
  if (k < 1) throw std::invalid_argument("bound requires k >= 1");
  switch (variant) {
    case WcolBoundVariant::TreeWidth:
      if (params.t < 0) throw std::invalid_argument("tree-width bound requires t >= 0");
      return binomial(k + params.t, params.t);
    case WcolBoundVariant::KtMinorFree: {
      if (params.t < 4) throw std::invalid_argument("minor-free bound requires t >= 4");
      long long t = params.t;
      return checked(i128(binomial(k + params.t - 2, params.t - 2)) * (t - 3) * (2 * k + 1) -
                     i128(k) * (t - 3));
    }
    case WcolBoundVariant::Genus: {
      if (params.genus < 0) throw std::invalid_argument("genus must be >= 0");
      return checked(i128(2 * params.genus + binomial(k + 2, 2)) * (2 * k + 1) - k);
    }
    case WcolBoundVariant::Planar:
      return checked(i128(binomial(k + 2, 2)) * (2 * k + 1) - k);
    case WcolBoundVariant::CompleteJoin: {
      if (params.s < 1 || params.t < 1)
        throw std::invalid_argument("complete-join bound requires s, t >= 1");
      return checked(i128(params.s) * (params.t - 1) * binomial(k + params.s, params.s) *
                     (2 * k + 1));
    }
  }
  throw std::logic_error("unknown bound variant");
}

long long chordal_power_bound(int delta, int p) {
  if (delta < 2) throw std::invalid_argument("chordal power bound requires delta >= 2");
  if (91ll * p < 118) throw std::domain_error("chordal power bound requires 91p >= 118");
  // floor(sqrt((91p-118)/384) * (d+1)^{(p+1)/2}) = floor(sqrt((91p-118) *
  // (d+1)^{p+1} / 384)); the floor commutes with the integer division
  // because r^2 <= N/D iff r^2 <= floor(N/D) for integral r^2.
  i128 scaled = i128(91ll * p - 118) * ipow128(delta + 1, p + 1) / 384;
  return checked(isqrt128(scaled) + delta + 1);
}

long long arboricity_power_bound(int delta, int p, int arb) {
  if (p < 1 || delta < 1 || arb < 1)
    throw std::invalid_argument("arboricity power bound requires positive parameters");
  return checked(ipow128(2, p + 1) * ipow128(arb, (p + 1) / 2) * ipow128(delta, p / 2));
}

long long tree_lower_bound(int delta, int p) {
  if (delta < 3) throw std::invalid_argument("tree lower bound requires delta >= 3");
  if (p < 1) throw std::invalid_argument("tree lower bound requires p >= 1");
  return checked((i128(delta) * ipow128(delta - 1, p / 2) - 2) / (delta - 2));
}

std::vector<BoundExpression> power_bounds(int delta, int p, const PowerBoundsExtra& extra) {
  std::vector<BoundExpression> out;
  out.push_back({"arboricity-power",
                 {{"delta", delta}, {"p", p}, {"arb", extra.arb}},
                 Rational(arboricity_power_bound(delta, p, extra.arb))});
  if (91ll * p >= 118 && delta >= 2)
    out.push_back({"chordal-power",
                   {{"delta", delta}, {"p", p}},
                   Rational(chordal_power_bound(delta, p))});
  if (delta >= 3) {
    Rational weak = Rational(delta, delta - 2) * Rational(2 * ((p + 1) / 2)) *
                    Rational(extra.q) * Rational(ipow(delta - 1, p / 2));
    out.push_back({"weak-orientation-power",
                   {{"delta", delta}, {"p", p}, {"q", extra.q}},
                   weak});
    out.push_back({"tree-lower", {{"delta", delta}, {"p", p}},
                   Rational(tree_lower_bound(delta, p))});
  }
  return out;
}

std::vector<BoundExpression> square_bounds(int k, int delta, std::optional<int> c) {
  if (k < 1) throw std::invalid_argument("square bounds require k >= 1");
  if (delta < 0) throw std::invalid_argument("square bounds require delta >= 0");
  long long kk = k, d = delta;
  std::vector<BoundExpression> out;

  long long term1 = checked(i128(2 * kk - 1) * d - kk * kk + kk + 1);
  long long term2 = checked(i128(2 * kk - 2) * d + 2 * kk * kk * kk + kk * kk + 2);
  long long term3 = checked(i128(kk - 1) * d + kk * kk * kk * kk + 2 * kk * kk * kk + 2);
  out.push_back({"square-discharging",
                 {{"k", k}, {"delta", delta}, {"hypothesis", "mad < 2k"},
                  {"terms", {term1, term2, term3}}},
                 Rational(std::max({term1, term2, term3}))});

  if (c) {
    if (*c < 2) throw std::invalid_argument("list bound requires c >= 2");
    out.push_back({"square-list",
                   {{"c", *c}, {"delta", delta},
                    {"hypothesis", "mad < 4 - 1/c and delta >= 14c - 7"}},
                   Rational(2ll * d)});
  }

  out.push_back({"square-game",
                 {{"k", k}, {"delta", delta},
                  {"hypothesis", "mad <= 2k and delta >= 2k - 2"}},
                 Rational(checked(i128(3 * kk - 2) * d - kk * kk + 4 * kk + 2))});

  out.push_back({"square-harmonious",
                 {{"k", k}, {"delta", delta}, {"hypothesis", "2k - 2 < mad <= 2k"}},
                 Rational(checked(i128(2 * kk - 1) * d + 2 * kk + 1))});
  return out;
}

nlohmann::ordered_json RatioRow::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["q"] = q;
  j["chordal_over_tree"] =
      chordal_over_tree ? nlohmann::ordered_json(chordal_over_tree->str()) : "n/a";
  j["weak_orientation_over_tree"] = weak_orientation_over_tree.str();
  j["chordal_estimate_sq"] =
      chordal_estimate_sq ? nlohmann::ordered_json(chordal_estimate_sq->str()) : "n/a";
  return j;
}

std::vector<RatioRow> ratio_table(int delta, int p_min, int p_max) {
  if (delta < 3) throw std::invalid_argument("ratio table requires delta >= 3");
  if (p_min < 1 || p_max < p_min) throw std::invalid_argument("bad p range");
  std::vector<RatioRow> rows;
  for (int p = p_min; p <= p_max; ++p) {
    RatioRow row;
    row.p = p;
    row.q = static_cast<int>(
        wcol_bound(WcolBoundVariant::Planar, {}, (p + 1) / 2));
    Rational tree_lb(tree_lower_bound(delta, p));
    Rational weak = Rational(delta, delta - 2) * Rational(2 * ((p + 1) / 2)) * Rational(row.q) *
                    Rational(ipow(delta - 1, p / 2));
    row.weak_orientation_over_tree = weak / tree_lb;
    if (91ll * p >= 118) {
      row.chordal_over_tree = Rational(chordal_power_bound(delta, p)) / tree_lb;
      // sqrt((91p-118)/384) * ((d-2)/d) * (1 + 2/(d-1))^{p/2}, squared to
      // keep the value rational for odd p.
      Rational base = Rational(delta + 1, delta - 1);  // 1 + 2/(d-1)
      Rational pow_term(1);
      for (int i = 0; i < p; ++i) pow_term *= base;
      row.chordal_estimate_sq = Rational(91ll * p - 118, 384) *
                                Rational(delta - 2, delta) * Rational(delta - 2, delta) *
                                pow_term;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace powercol
