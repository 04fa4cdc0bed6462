#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "quarkalg/verify.hpp"

int main(int argc, char** argv) {
  using namespace quarkalg;
  RunConfig cfg;
  std::string backend = "auto";
  std::string json_path;

  CLI::App app{"Run the quark algebra verification suites."};
  app.allow_windows_style_options(false);
  app.add_option("suite", cfg.suite, "Suite to run")
      ->check(CLI::IsMember(suite_names()))
      ->default_str("all");
  app.add_option("--backend", backend, "auto, exact or float")
      ->check(CLI::IsMember({"auto", "exact", "float"}))
      ->default_str("auto");
  app.add_option("--samples", cfg.samples, "Samples per randomized check")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000000}))
      ->default_str("100");
  app.add_option("--seed", cfg.seed, "64-bit seed")->default_str("42");
  app.add_option("--tolerance", cfg.tolerance, "Float tolerance")
      ->check(CLI::PositiveNumber)
      ->default_str("1e-09");
  app.add_option("--json", json_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    std::cerr << app.help();
    return 2;
  }

  static const std::map<std::string, Backend> backends = {
      {"auto", Backend::automatic}, {"exact", Backend::exact}, {"float", Backend::floating}};
  cfg.backend = backends.at(backend);
  if (!json_path.empty()) cfg.json_path = json_path;

  std::vector<CheckReport> reports;
  try {
    reports = run_suites(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  for (const auto& r : reports)
    std::printf("%-44s %s  residual=%s\n", r.name.c_str(), to_string(r.status), format_number(r.residual).c_str());

  if (cfg.json_path) {
    std::ofstream out(*cfg.json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << *cfg.json_path << "\n";
      return 2;
    }
    out << reports_to_json(reports);
  }

  std::fflush(stdout);
  const bool ok = all_passed(reports);
  std::fprintf(stderr, "%zu checks, %s\n", reports.size(), ok ? "all passed" : "some failed");
  return ok ? 0 : 1;
}
