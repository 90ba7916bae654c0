#include "powercol/corpus.hpp"

#include <stdexcept>

namespace powercol {

CorpusKind corpus_kind_from_name(const std::string& name) {
  if (name == "small") return CorpusKind::Small;
  if (name == "medium") return CorpusKind::Medium;
  throw std::invalid_argument("unknown corpus: " + name);
}

namespace {

std::vector<FamilyInstance> build_small() {
  std::vector<FamilyInstance> out;
  for (int n = 1; n <= 12; ++n) out.push_back(path_graph(n));
  for (int n = 3; n <= 12; ++n) out.push_back(cycle_graph(n));
  for (int n = 1; n <= 12; ++n) out.push_back(complete_graph(n));
  for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}})
    out.push_back(grid_graph(r, c));
  out.push_back(complete_ary_tree(3, 0));
  out.push_back(complete_ary_tree(3, 1));
  out.push_back(complete_ary_tree(3, 2));
  out.push_back(complete_ary_tree(4, 1));
  out.push_back(complete_ary_tree(5, 1));
  out.push_back(complete_ary_tree(6, 1));
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 2; n <= 12; ++n)
      for (uint64_t seed : {0, 1}) out.push_back(random_k_tree(k, n, seed));
  for (int n = 4; n <= 12; ++n) {
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    for (long long m : {static_cast<long long>(n - 1), static_cast<long long>(n),
                        (3ll * n) / 2, std::min(max_m, 2ll * n)})
      for (uint64_t seed : {0, 1, 2}) out.push_back(random_graph(n, m, seed));
  }
  // A few sparse instances that come out disconnected, plus edgeless ones.
  for (int n : {6, 9, 12})
    for (uint64_t seed : {0, 1}) out.push_back(random_graph(n, n / 2, seed));
  for (int n : {1, 4, 8}) out.push_back(random_graph(n, 0, 0));
  return out;
}

std::vector<FamilyInstance> build_medium() {
  std::vector<FamilyInstance> out;
  for (int n : {20, 35, 50}) {
    out.push_back(path_graph(n));
    out.push_back(cycle_graph(n));
  }
  out.push_back(grid_graph(4, 5));
  out.push_back(grid_graph(5, 6));
  out.push_back(grid_graph(6, 8));
  out.push_back(complete_ary_tree(3, 3));
  out.push_back(complete_ary_tree(4, 2));
  out.push_back(complete_ary_tree(4, 3));
  out.push_back(complete_ary_tree(5, 2));
  for (int k = 1; k <= 4; ++k)
    for (int n : {20, 32, 48})
      for (uint64_t seed : {0, 1}) out.push_back(random_k_tree(k, n, seed));
  for (int n : {20, 30, 40})
    for (long long m : {2ll * n, 3ll * n})
      for (uint64_t seed : {0, 1}) out.push_back(random_graph(n, m, seed));
  return out;
}

}  // namespace

const std::vector<FamilyInstance>& corpus(CorpusKind kind) {
  static const std::vector<FamilyInstance> small = build_small();
  static const std::vector<FamilyInstance> medium = build_medium();
  return kind == CorpusKind::Small ? small : medium;
}

}  // namespace powercol
