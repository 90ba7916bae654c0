#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace powercol {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// Record of one machine-checked inequality or claim.
struct VerificationReport {
  std::string check;  // stable identifier, e.g. "thm24.out-weight"
  bool pass = true;
  nlohmann::ordered_json details;  // parameter values, bounds, witnesses

  static VerificationReport make(std::string check, bool pass,
                                 nlohmann::ordered_json details = nlohmann::ordered_json::object()) {
    return {std::move(check), pass, std::move(details)};
  }

  nlohmann::ordered_json to_json() const;
};

/// Top-level machine-readable result of a CLI command.
struct RunReport {
  std::string command;
  std::string input;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<VerificationReport> checks;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace powercol
