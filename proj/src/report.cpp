#include "rsfield/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace rsfield {

int Report::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.pass; }));
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema_version"] = schema_version;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) cfg[key] = value;
  doc["config"] = cfg;
  nlohmann::ordered_json checks_json = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json item;
    item["suite"] = c.suite;
    item["name"] = c.name;
    item["relation"] = c.relation;
    item["observed"] = c.observed;
    item["tolerance"] = c.tolerance;
    item["pass"] = c.pass;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks_json.push_back(item);
  }
  doc["checks"] = checks_json;
  doc["summary"] = {{"total", total()}, {"passed", passed()}, {"failed", total() - passed()}};
  return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::size_t suite_w = 5, name_w = 4, rel_w = 8;
  for (const CheckResult& c : checks) {
    suite_w = std::max(suite_w, c.suite.size());
    name_w = std::max(name_w, c.name.size());
    rel_w = std::max(rel_w, c.relation.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(suite_w) + 2) << "suite"
      << std::setw(static_cast<int>(name_w) + 2) << "name"
      << std::setw(static_cast<int>(rel_w) + 2) << "relation" << std::setw(14) << "observed"
      << std::setw(14) << "tolerance" << "status\n";
  for (const CheckResult& c : checks) {
    std::ostringstream obs, tol;
    obs << std::scientific << std::setprecision(3) << c.observed;
    tol << std::scientific << std::setprecision(3) << c.tolerance;
    out << std::left << std::setw(static_cast<int>(suite_w) + 2) << c.suite
        << std::setw(static_cast<int>(name_w) + 2) << c.name
        << std::setw(static_cast<int>(rel_w) + 2) << c.relation << std::setw(14) << obs.str()
        << std::setw(14) << tol.str() << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  out << "\n" << passed() << "/" << total() << " checks passed\n";
  return out.str();
}

CheckResult make_check(std::string suite, std::string name, std::string relation, double observed,
                       double tolerance, std::string detail) {
  CheckResult c;
  c.suite = std::move(suite);
  c.name = std::move(name);
  c.relation = std::move(relation);
  c.observed = observed;
  c.tolerance = tolerance;
  c.pass = observed <= tolerance;
  c.detail = std::move(detail);
  return c;
}

}  // namespace rsfield
