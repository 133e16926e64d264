#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsfield/report.hpp"

namespace rsfield {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scenario configuration for the verification batch tool. Sources, in
/// precedence order: built-in defaults, then a key=value config file, then
/// command-line overrides (later wins).
struct RunConfig {
  double L = 6.283185307179586;  // 2 pi
  int N = 32;
  double k_max = 4.0;  // field-state lattice cutoff
  double hbar = 1.0;
  double c = 1.0;
  double sigma1 = 0.35;
  double sigma2 = 0.35;
  double kmax_sigma = 8.0;  // commutator cutoff rule: k_max = kmax_sigma / min(sigma)
  std::uint64_t seed = 20260810;
  bool inject_longitudinal = false;
  std::string suite = "all";
  std::string out_dir = "out";
  std::string state_file;  // optional amplitude scenario ("nx ny nz lambda re im" lines)

  void validate() const;  // throws ConfigError
  std::map<std::string, std::string> as_map() const;
};

/// Parse a flat key=value file ('#' comments, blank lines ignored).
void load_config_file(RunConfig& config, const std::string& path);
/// Apply one key=value assignment; throws ConfigError on unknown keys.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

/// Run the selected verification suites and return the report.
Report run_verify(const RunConfig& config);

/// Cutoff-convergence study: one CSV row per (check, cutoff) with the relative
/// error of the modesum route against the analytic value. Cutoffs must be
/// increasing. When `report` is non-null, monotonicity checks are appended.
std::string run_converge(const RunConfig& config, const std::vector<double>& cutoffs,
                         Report* report = nullptr);

/// Default convergence ladder: k_max * min(sigma) in {2, 4, 8}.
std::vector<double> default_converge_cutoffs(const RunConfig& config);

inline const char* converge_csv_header() {
  return "check,pair,k,l,tau,cutoff,analytic,modesum_re,modesum_im,rel_error";
}

}  // namespace rsfield
