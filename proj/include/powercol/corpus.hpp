#pragma once

#include <string>
#include <vector>

#include "powercol/families.hpp"

namespace powercol {

enum class CorpusKind { Small, Medium };

CorpusKind corpus_kind_from_name(const std::string& name);

/// Deterministic test corpus. The small corpus holds 200+ instances from all
/// families with n <= 12; the medium corpus adds larger instances for
/// heuristic-path exercises.
const std::vector<FamilyInstance>& corpus(CorpusKind kind);

}  // namespace powercol
