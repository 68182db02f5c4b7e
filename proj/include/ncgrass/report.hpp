#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ncgrass/errors.hpp"
#include "ncgrass/outcome.hpp"

namespace ncgrass {

inline constexpr const char* kArtifactName = "ncgrass";
inline constexpr const char* kArtifactVersion = "0.1.0";

/** Which suites to run and at what scale. */
struct SuiteConfig {
  std::string suite = "all";  // quasidet|quasiplucker|quantum|specialization|classical|all
  std::uint64_t seed = 42;
  std::vector<std::pair<int, int>> dims = {{4, 2}};  // (n, d), d < n
  long trials = 10;
  int max_n = 5;
  bool timing = true;  // false zeroes elapsed_ms so reports compare byte-for-byte
};

inline void validate_config(const SuiteConfig& cfg) {
  static const char* names[] = {"quasidet",       "quasiplucker", "quantum",
                                "specialization", "classical",    "all"};
  bool known = false;
  for (const char* n : names) known = known || cfg.suite == n;
  if (!known) throw ConfigError("unknown suite '" + cfg.suite + "'");
  if (cfg.trials < 0) throw ConfigError("trials must be nonnegative");
  if (cfg.max_n < 1) throw ConfigError("max-n must be positive");
  if (cfg.dims.empty()) throw ConfigError("at least one n:d pair required");
  for (const auto& [n, d] : cfg.dims) {
    if (d < 1 || n < 2 || d >= n)
      throw ConfigError("dims must satisfy 1 <= d < n, got " + std::to_string(n) +
                        ":" + std::to_string(d));
  }
}

struct CheckRecord {
  std::string suite;
  std::string identity;
  std::string anchor;
  std::string params;
  Outcome status = Outcome::Pass;
  long elapsed_ms = 0;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;

  long count(Outcome o) const {
    long c = 0;
    for (const CheckRecord& r : checks)
      if (r.status == o) ++c;
    return c;
  }

  /** Order-normalize so execution order never affects output bytes. */
  void sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                       return std::tie(a.suite, a.identity, a.params) <
                              std::tie(b.suite, b.identity, b.params);
                     });
  }
};

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

inline std::string dims_string(const SuiteConfig& cfg) {
  std::string s;
  for (std::size_t k = 0; k < cfg.dims.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(cfg.dims[k].first) + ":" + std::to_string(cfg.dims[k].second);
  }
  return s;
}

}  // namespace detail

/**
 * Reports are rendered by hand rather than through a JSON library: the
 * schema is flat and frozen, and hand-rendering keeps the byte layout
 * under our control, which the golden-file determinism contract needs.
 */
inline std::string render_json(const VerificationReport& rep) {
  using detail::json_escape;
  std::ostringstream os;
  os << "{\n";
  os << "  \"artifact\": {\"name\": \"" << kArtifactName << "\", \"version\": \""
     << kArtifactVersion << "\"},\n";
  os << "  \"config\": {\"suite\": \"" << json_escape(rep.config.suite)
     << "\", \"seed\": " << rep.config.seed << ", \"dims\": \""
     << detail::dims_string(rep.config) << "\", \"trials\": " << rep.config.trials
     << ", \"max_n\": " << rep.config.max_n << "},\n";
  os << "  \"summary\": {\"pass\": " << rep.count(Outcome::Pass)
     << ", \"fail\": " << rep.count(Outcome::Fail)
     << ", \"undefined\": " << rep.count(Outcome::Undefined)
     << ", \"degenerate\": " << rep.count(Outcome::Degenerate) << "},\n";
  os << "  \"checks\": [";
  for (std::size_t k = 0; k < rep.checks.size(); ++k) {
    const CheckRecord& r = rep.checks[k];
    os << (k ? ",\n    " : "\n    ");
    os << "{\"suite\": \"" << json_escape(r.suite) << "\", \"identity\": \""
       << json_escape(r.identity) << "\", \"anchor\": \"" << json_escape(r.anchor)
       << "\", \"params\": \"" << json_escape(r.params) << "\", \"status\": \""
       << to_string(r.status) << "\", \"elapsed_ms\": " << r.elapsed_ms << "}";
  }
  os << (rep.checks.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

inline std::string render_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << kArtifactName << " " << kArtifactVersion << "  suite=" << rep.config.suite
     << " seed=" << rep.config.seed << " dims=" << detail::dims_string(rep.config)
     << " trials=" << rep.config.trials << " max_n=" << rep.config.max_n << "\n\n";
  std::size_t wid = 8, wpar = 6;
  for (const CheckRecord& r : rep.checks) {
    wid = std::max(wid, r.identity.size());
    wpar = std::max(wpar, r.params.size());
  }
  for (const CheckRecord& r : rep.checks) {
    os << r.suite;
    os << std::string(r.suite.size() < 15 ? 15 - r.suite.size() : 1, ' ');
    os << r.identity;
    os << std::string(wid + 2 - r.identity.size(), ' ');
    os << r.params;
    os << std::string(wpar + 2 - r.params.size(), ' ');
    os << to_string(r.status) << "  " << r.elapsed_ms << "ms\n";
  }
  os << "\npass " << rep.count(Outcome::Pass) << "  fail " << rep.count(Outcome::Fail)
     << "  undefined " << rep.count(Outcome::Undefined) << "  degenerate "
     << rep.count(Outcome::Degenerate) << "\n";
  return os.str();
}

}  // namespace ncgrass
