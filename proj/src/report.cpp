#include "powercol/report.hpp"

namespace powercol {

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["pass"] = pass;
  j["details"] = details;
  return j;
}

bool RunReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kToolkitVersion;
  j["command"] = command;
  j["input"] = input;
  j["params"] = params;
  j["result"] = result;
  j["pass"] = all_pass();
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) cs.push_back(c.to_json());
  j["checks"] = cs;
  return j;
}

}  // namespace powercol
