#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rsfield/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rsfield::ConfigError("cannot write output file " + path.string());
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rsfield: numerical verification of free electromagnetic field "
               "quantization (field synthesis, symmetry transforms, smeared commutator "
               "kernels, two independent evaluation routes)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string suite;
  std::string out_dir;
  std::int64_t seed = -1;
  std::vector<double> kmax_values;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value configuration file");
    cmd->add_option("--suite", suite,
                    "suite: maxwell, transforms, tensoralg, commutators, converge, all");
    cmd->add_option("--out", out_dir, "output directory for reports");
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--kmax", kmax_values,
                    "mode cutoff; repeatable to set the converge cutoff ladder");
  };
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* converge = app.add_subcommand("converge", "cutoff-convergence study (CSV)");
  add_common(verify);
  add_common(converge);

  CLI11_PARSE(app, argc, argv);

  try {
    rsfield::RunConfig config;
    if (!config_path.empty()) rsfield::load_config_file(config, config_path);
    if (!suite.empty()) rsfield::apply_config_entry(config, "suite", suite);
    if (!out_dir.empty()) rsfield::apply_config_entry(config, "out", out_dir);
    if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
    if (!kmax_values.empty() && app.got_subcommand(verify)) config.k_max = kmax_values.back();
    config.validate();

    std::filesystem::create_directories(config.out_dir);

    if (app.got_subcommand(verify)) {
      const rsfield::Report report = rsfield::run_verify(config);
      write_file(std::filesystem::path(config.out_dir) / "report.json", report.to_json());
      write_file(std::filesystem::path(config.out_dir) / "report.txt", report.to_text());
      std::cout << report.to_text();
      if (!report.all_passed()) {
        std::cout << "FAILED checks:\n";
        for (const auto& check : report.checks) {
          if (!check.pass) std::cout << "  " << check.suite << "." << check.name << "\n";
        }
        return kExitCheckFailure;
      }
      return kExitPass;
    }

    // converge
    std::vector<double> cutoffs = kmax_values;
    if (cutoffs.empty()) cutoffs = rsfield::default_converge_cutoffs(config);
    rsfield::Report report;
    report.config = config.as_map();
    const std::string csv = rsfield::run_converge(config, cutoffs, &report);
    write_file(std::filesystem::path(config.out_dir) / "converge.csv", csv);
    std::cout << csv;
    if (!report.all_passed()) {
      std::cout << "convergence monotonicity violated\n";
      return kExitCheckFailure;
    }
    return kExitPass;
  } catch (const rsfield::ConfigError& err) {
    std::cerr << "configuration error: " << err.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitConfigError;
  }
}
