#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symsing/report/report.hpp"

namespace symsing::cli {

inline constexpr const char* tool_name = "symsing";
inline constexpr const char* tool_version = "0.1.0";

struct DRange {
  int lo = 4, hi = 8;
  bool contains(int d) const { return lo <= d && d <= hi; }
};

/// Parses "a..b" or "a".  Throws std::invalid_argument on malformed text or an empty range.
DRange parse_range(const std::string& text);

struct RunConfig {
  /// Groebner-, Hilbert- and enumeration-heavy suites.
  DRange heavy{4, 8};
  /// Identity and invariance suites.
  DRange identity{4, 12};
  /// Hilbert degree bound; each d uses max(N, 2d).
  int N = 12;
  int psi_order = 50;
  int completion_order = 8;
  int completion_d_max = 6;
  std::uint64_t seed = 20240611;
  int trials = 8;
  std::size_t max_terms = 2000000;
  std::size_t max_basis = 5000;
  double max_seconds = 600.0;
  std::size_t regular_point_candidates = 20000;
  std::string out;

  Json to_json() const;
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Applies key=value lines or a JSON object to cfg.  Throws std::invalid_argument on unknown
/// keys, bad values or malformed text.
void apply_config_text(RunConfig& cfg, const std::string& text);

const std::vector<std::string>& suite_names();

/// Runs one suite under cfg.  Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(const std::string& suite, const RunConfig& cfg);

/// Top-level report: tool, version, schema version, command, config echo, sorted checks, summary,
/// and optional extra data.
Json make_report(const std::string& command, const RunConfig& cfg, const VerificationReport& rep,
                 const Json& data = nullptr);

}  // namespace symsing::cli
