#pragma once

#include <map>
#include <string>
#include <vector>

namespace rsfield {

/// One verification check: a named defect measured against a pinned tolerance,
/// labelled with the physical relation it exercises so failures are traceable.
struct CheckResult {
  std::string suite;
  std::string name;
  std::string relation;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct Report {
  int schema_version = 1;
  std::map<std::string, std::string> config;  // sorted keys: deterministic output
  std::vector<CheckResult> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const;
  bool all_passed() const { return passed() == total(); }

  void add(CheckResult check) { checks.push_back(std::move(check)); }

  /// Machine-readable document (JSON, schema_version field included).
  std::string to_json() const;
  /// Aligned-column text summary.
  std::string to_text() const;
};

/// Helper for defect-style checks: pass iff observed <= tolerance.
CheckResult make_check(std::string suite, std::string name, std::string relation, double observed,
                       double tolerance, std::string detail = "");

}  // namespace rsfield
