#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rgd/verifier.hpp"

namespace rgd {

struct RunConfig {
  std::string group = "sl";
  int rank = 1;
  int dim = 3;
  int witt = 1;
  int disc = -1;
  long level_min = -2;
  long level_max = 2;
  std::size_t samples = 8;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;  // empty means all
  std::string format = "json";
  std::optional<std::string> out;

  void validate() const;  // throws ConfigError
  SuiteConfig suite_config() const;
  GroupModel build_model() const;
};

struct RunResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
  std::string text;  // rendered in the configured format
};

nlohmann::ordered_json model_descriptor(const GroupModel& g);
nlohmann::ordered_json config_echo(const RunConfig& cfg);
nlohmann::ordered_json suite_json(const AxiomReport& r);

RunResult run(const RunConfig& cfg);
std::string render_markdown(const nlohmann::ordered_json& report);

// Report with run-dependent fields (timestamp, elapsed_ms) removed.
nlohmann::ordered_json canonical_report(nlohmann::ordered_json report);

}  // namespace rgd
