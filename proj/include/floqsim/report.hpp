#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace floqsim {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "floqsim-report/1";

struct RunConfig {
  std::string family;
  int L = 0;
  std::string boundary = "torus";
  std::string schedule;
  std::optional<std::string> init;
  std::size_t periods = 2;
  std::size_t warmup = 2;
  std::vector<std::string> analyses = {"k"};
  std::string out;
  std::uint64_t seed = 1;
  int diameter = 4;
};

const std::vector<std::string>& known_analyses();

// Parses a JSON config; ConfigError names the line or field at fault.
RunConfig parse_run_config(const std::string& text);
Json config_to_json(const RunConfig& c);
// Checks field values; throws ConfigError.
void validate_config(const RunConfig& c);

// Report with every field but "timestamp" a function of the config.
Json cmd_run(const RunConfig& config);
std::string report_summary(const Json& report);
// Report dump with the timestamp removed, for determinism comparisons.
std::string deterministic_dump(const Json& report);

struct ReproduceResult {
  Json report;
  bool ok = true;
  std::vector<std::string> lines;  // side-by-side expected vs computed
};
const std::vector<std::string>& reproduce_tables();
// L overrides the table's default size. Throws ConfigError for unknown ids.
ReproduceResult cmd_reproduce(const std::string& table, std::optional<int> L = std::nullopt);

struct SelftestResult {
  bool ok = true;
  std::vector<std::string> lines;
};
SelftestResult cmd_selftest(std::uint64_t seed);

}  // namespace floqsim
