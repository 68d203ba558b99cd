#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hecke/report.hpp"

namespace hecke {

struct RunConfig {
  std::string subcommand;
  int n = 2;
  std::string tau = "2", t = "1", c = "1";
  std::uint64_t seed = 0;
  int trials = 5;
  int degree_bound = 5;
  std::string flavor = "both";  // dunkl: rational, trig, both
  std::optional<std::string> input_path, output_path;
};

struct RunResult {
  int exit_code = 0;  // 0 all pass, 1 a check failed, 2 config error
  json report;        // null on config error
  std::string error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RunResult run(const RunConfig &cfg);
bool report_schema_validate(const std::string &path);
bool report_schema_validate_text(const std::string &text);

}  // namespace hecke
