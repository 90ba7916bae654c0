#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powercol/corpus.hpp"
#include "powercol/graph.hpp"
#include "powercol/report.hpp"

namespace powercol {

struct SuiteOptions {
  CorpusKind corpus_kind = CorpusKind::Small;
  std::optional<Graph> graph;  // run on this graph instead of the corpus
  std::string graph_label = "graph";
  std::vector<int> power_exponents = {2, 3, 4};
  std::optional<int> lb_delta;  // lb-tree: single (delta, p) cell
  std::optional<int> lb_p;
  std::optional<Ordering> collection_priority;  // thm38's L; default id order
  // Single-graph runs only: thm24 appends one JSON line per power-edge
  // certificate, thm38 one per collection-trace event.
  std::string audit_path;
};

const std::vector<std::string>& suite_names();

/// Runs one named verification suite ("prop12", "prop13", "thm11", "thm24",
/// "thm38", "lb-tree" or "all") and returns its aggregated check reports.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace powercol
