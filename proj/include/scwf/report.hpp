#pragma once

// Structured run reports with a text and a machine rendering. The machine
// form is byte-stable across runs for identical inputs and seeds, so it
// carries no timing; wall-clock time goes to the text form only.

#include <string>
#include <vector>

#include <json.hpp>

namespace scwf {

struct ReportCheck {
  std::string id;
  std::string verdict;  // "pass" | "fail" | "error" | "info"
  std::string detail;   // counterexample payload or summary, may be empty
};

struct Report {
  std::string command;
  std::vector<ReportCheck> checks;
  double seconds = 0.0;

  void add(const std::string& id, bool ok, const std::string& detail = "") {
    checks.push_back({id, ok ? "pass" : "fail", detail});
  }
  void info(const std::string& id, const std::string& detail) {
    checks.push_back({id, "info", detail});
  }

  bool pass() const {
    for (const auto& c : checks)
      if (c.verdict == "fail" || c.verdict == "error") return false;
    return true;
  }

  std::string status() const { return pass() ? "pass" : "fail"; }

  std::string to_text() const {
    std::string out = "== " + command + " ==\n";
    for (const auto& c : checks) {
      out += "  [" + c.verdict + "] " + c.id;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += '\n';
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    out += "status: " + status() + " (" + buf + "s)\n";
    return out;
  }

  std::string to_machine() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["status"] = status();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json e;
      e["id"] = c.id;
      e["verdict"] = c.verdict;
      e["detail"] = c.detail;
      j["checks"].push_back(e);
    }
    return j.dump(2) + "\n";
  }
};

}  // namespace scwf
