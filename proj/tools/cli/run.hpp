#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "json.hpp"
#include "qturan/residual.hpp"
#include "qturan/turanian.hpp"

namespace qturan::cli {

enum ExitCode { kPass = 0, kFail = 1, kConfigError = 2, kDomainError = 3 };

using Json = nlohmann::ordered_json;

/// Accumulates one run's results. Entries are appended in a fixed order so an
/// Exact-mode report is byte-for-byte reproducible.
struct Report {
  Json config = Json::object();
  Json verdicts = Json::array();
  Json residuals = Json::array();
  Json margins = Json::array();
  Json values = Json::array();
  Json timing = nullptr;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  bool ok = true;
  /// Points that raised a domain error (scan keeps going past them).
  std::size_t errors = 0;
  /// Text lines for the terminal.
  std::vector<std::string> lines;

  Json to_json() const;
  std::string to_csv() const;
};

/// Executes the configured command and fills `report`.
/// Throws ConfigError or qturan::Error on failure.
void execute(const RunConfig& config, Report& report);

/// The resolved configuration as embedded in every report.
Json config_json(const RunConfig& config, const Resolved& resolved);

Json residual_json(const Residual& r, const Scalar& tolerance);
Json sign_json(const SignReport& r);

/// Runs the command, writes the requested artifacts and returns the exit code.
/// Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv front end for run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The canned battery behind `qturan report`.
void run_battery(const Resolved& resolved, Report& report);

}  // namespace qturan::cli
