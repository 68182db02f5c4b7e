// Command line front end: configures the verification suites, runs them,
// and emits the report as JSON or aligned text.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ncgrass/report.hpp"
#include "ncgrass/suites.hpp"

namespace {

/** "4:2,5:3" into (n, d) pairs; nullopt on anything malformed. */
std::optional<std::vector<std::pair<int, int>>> parse_dims(const std::string& text) {
  std::vector<std::pair<int, int>> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
      return std::nullopt;
    try {
      std::size_t used = 0;
      const int n = std::stoi(item.substr(0, colon), &used);
      if (used != colon) return std::nullopt;
      const std::string rest = item.substr(colon + 1);
      const int d = std::stoi(rest, &used);
      if (used != rest.size()) return std::nullopt;
      dims.push_back({n, d});
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (dims.empty()) return std::nullopt;
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for noncommutative determinant and ratio identities"};
  app.set_config("--config", "", "Read options from a key=value file");

  ncgrass::SuiteConfig cfg;
  if (const char* env = std::getenv("NCGRASS_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && *env != '\0') cfg.seed = v;
  }

  std::string dims_text = "4:2";
  std::string format = "json";
  std::string out_path;
  bool no_timing = false;

  app.add_option("--suite", cfg.suite,
                 "quasidet, quasiplucker, quantum, specialization, classical, or all")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed for the sampled suites")
      ->capture_default_str();
  app.add_option("--dims", dims_text, "Comma list of n:d shapes, each with d < n")
      ->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random trials per shape")
      ->capture_default_str();
  app.add_option("--max-n", cfg.max_n, "Skip shapes above this size")
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--no-timing", no_timing,
               "Report zero elapsed times so reruns are byte identical");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto dims = parse_dims(dims_text);
  if (!dims) {
    std::cerr << "error: --dims wants a comma list of n:d pairs, got \"" << dims_text
              << "\"\n";
    return 2;
  }
  cfg.dims = *dims;
  cfg.timing = !no_timing;

  try {
    ncgrass::validate_config(cfg);
  } catch (const ncgrass::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream out_file;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
  }

  const ncgrass::VerificationReport report = ncgrass::run_suites(cfg);
  const std::string doc =
      format == "json" ? ncgrass::render_json(report) : ncgrass::render_text(report);
  if (out_file.is_open())
    out_file << doc;
  else
    std::cout << doc;

  return report.count(ncgrass::Outcome::Fail) > 0 ? 1 : 0;
}
