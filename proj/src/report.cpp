#include "qha/report.hpp"

#include <json.hpp>

namespace qha {

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string Report::text() const {
  std::string s = "command: " + command + "\n";
  for (const auto& l : lines) s += l + "\n";
  for (const auto& c : checks) {
    s += c.name + ": " + (c.ok ? "pass" : "FAIL");
    if (c.checked > 0) s += " (" + std::to_string(c.checked) + " checked)";
    s += "\n";
    if (!c.ok && !c.witness.empty()) s += "  witness: " + c.witness + "\n";
  }
  s += std::string("status: ") + (ok() ? "pass" : "FAIL") + "\n";
  return s;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["schema"] = "qha-report/1";
  j["command"] = command;
  j["ok"] = ok();
  j["info"] = lines;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"checked", c.checked}, {"witness", c.witness}});
  return j.dump(2) + "\n";
}

}  // namespace qha
