#pragma once

#include <string>
#include <vector>

namespace qha {

struct CheckResult {
  std::string name;
  bool ok = true;
  long checked = 0;
  std::string witness;

  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
};

struct Report {
  std::string command;
  std::vector<CheckResult> checks;
  std::vector<std::string> lines;  // informational output

  bool ok() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void info(std::string s) { lines.push_back(std::move(s)); }
  std::string text() const;
  std::string json() const;
};

}  // namespace qha
