#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qturan/qbase.hpp"
#include "qturan/scalar.hpp"
#include "qturan/turanian.hpp"

namespace qturan::cli {

/// Malformed or inconsistent command-line input (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { Eval, Turanian, Conditions, Verify, Scan, Report };
std::string to_string(Command c);

/// Everything a run needs, as given on the command line. Values stay textual
/// until resolve() so the report can echo the canonical form.
struct RunConfig {
  Command command = Command::Turanian;
  std::string family = "heine-f";
  std::optional<std::string> q;
  std::optional<std::string> p;
  std::string mu = "1";
  std::string alpha = "1";
  std::string beta = "1";
  std::optional<std::string> mu_grid;
  std::optional<std::string> alpha_grid;
  std::optional<std::string> beta_grid;
  std::string a;
  std::string b;
  std::string nu = "1";
  std::string eta = "1";
  std::optional<std::string> x;
  std::string y = "1";
  std::size_t m = 10;
  std::string q_sequence = "0.9,0.99,0.999";
  std::size_t order = 0;  // 0: per-command default
  std::string mode = "exact";
  unsigned digits = 0;  // 0: default_digits()
  std::string identity;
  std::optional<std::string> tolerance;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  unsigned threads = 1;
  bool timing = false;
};

/// Typed view of a RunConfig.
struct Resolved {
  Mode mode;
  QBase q;
  Family family;
  ParamVector a;
  ParamVector b;
  std::size_t order;
  Scalar tolerance;  // Float residual threshold
};

Resolved resolve(const RunConfig& config);

/// Parses a parameter in the run mode; Exact mode accepts only multiples of 1/2.
Scalar parse_param(const std::string& text, const Mode& mode, const std::string& name);
/// "start:stop:step", inclusive of stop within step/2.
std::vector<Scalar> parse_grid(const std::string& text, const Mode& mode, const std::string& name);
std::vector<Scalar> parse_list(const std::string& text, const Mode& mode, const std::string& name);

/// Parses argv into a RunConfig (ConfigError on bad input). Returns nullopt
/// after printing help.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

}  // namespace qturan::cli
