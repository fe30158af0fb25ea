#include "config.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qturan/errors.hpp"

namespace qturan::cli {

std::string to_string(Command c) {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::Turanian: return "turanian";
    case Command::Conditions: return "conditions";
    case Command::Verify: return "verify";
    case Command::Scan: return "scan";
    case Command::Report: return "report";
  }
  return "?";
}

namespace {

Family parse_family(const std::string& text) {
  if (text == "heine-f") return Family::HeineF;
  if (text == "heine-f-tilde") return Family::HeineFTilde;
  if (text == "g") return Family::GNormalized;
  throw ConfigError("unknown family '" + text + "' (heine-f, heine-f-tilde, g)");
}

Mode parse_mode(const std::string& text, unsigned digits) {
  if (text == "exact") return Mode::exact();
  if (text == "float") return digits == 0 ? Mode::floating() : Mode::floating(digits);
  throw ConfigError("unknown mode '" + text + "' (exact, float)");
}

std::size_t default_order(Command c) {
  switch (c) {
    case Command::Verify: return 30;
    case Command::Eval: return 20;
    default: return 60;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

Scalar parse_param(const std::string& text, const Mode& mode, const std::string& name) {
  Scalar value;
  try {
    value = Scalar::parse(text, mode);
  } catch (const Error& e) {
    throw ConfigError("--" + name + ": " + e.what());
  }
  if (mode.is_exact()) {
    const mpq_class twice = value.as_rational() * 2;
    if (twice.get_den() != 1) {
      throw ConfigError("--" + name + " " + text +
                        ": exact mode needs a multiple of 1/2 so that q^" + name +
                        " stays exact (use --mode float)");
    }
  }
  return value;
}

std::vector<Scalar> parse_list(const std::string& text, const Mode& mode, const std::string& name) {
  std::vector<Scalar> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw ConfigError("--" + name + ": empty entry in '" + text + "'");
    out.push_back(parse_param(part, mode, name));
  }
  return out;
}

std::vector<Scalar> parse_grid(const std::string& text, const Mode& mode, const std::string& name) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("--" + name + ": expected start:stop:step, got '" + text + "'");
  const Scalar start = parse_param(parts[0], mode, name);
  const Scalar stop = parse_param(parts[1], mode, name);
  Scalar step;
  try {
    step = Scalar::parse(parts[2], mode);
  } catch (const Error& e) {
    throw ConfigError("--" + name + ": " + e.what());
  }
  if (step.sign() <= 0) throw ConfigError("--" + name + ": step must be positive");
  std::vector<Scalar> grid;
  const Scalar limit = stop + step / step.like(2);
  for (long i = 0;; ++i) {
    Scalar value = start + step * step.like(i);
    if (value > limit || value == limit) break;
    if (mode.is_exact()) value = parse_param(value.to_string(), mode, name);
    grid.push_back(value);
    if (grid.size() > 100000) throw ConfigError("--" + name + ": grid too large");
  }
  if (grid.empty()) throw ConfigError("--" + name + ": empty grid '" + text + "'");
  return grid;
}

Resolved resolve(const RunConfig& config) {
  const Mode mode = parse_mode(config.mode, config.digits);
  if (config.q && config.p) throw ConfigError("give either --q or --p, not both");
  std::optional<QBase> q;
  try {
    if (config.p) {
      q = QBase::from_p(Scalar::parse(*config.p, mode));
    } else {
      q = QBase::from_q(Scalar::parse(config.q.value_or("1/2"), mode));
    }
  } catch (const OffGridError& e) {
    throw ConfigError(std::string("--q: ") + e.what() + " (give the root via --p)");
  } catch (const Error& e) {
    throw ConfigError(std::string(config.p ? "--p: " : "--q: ") + e.what());
  }
  ParamVector a;
  ParamVector b;
  if (!config.a.empty()) a = ParamVector(parse_list(config.a, mode, "a"), true);
  if (!config.b.empty()) b = ParamVector(parse_list(config.b, mode, "b"), true);
  Scalar tolerance = Scalar::exact(0);
  if (!mode.is_exact() || config.tolerance) {
    const Mode fmode = mode.is_exact() ? Mode::floating() : mode;
    if (config.tolerance) {
      try {
        tolerance = Scalar::parse(*config.tolerance, fmode);
      } catch (const Error& e) {
        throw ConfigError(std::string("--tolerance: ") + e.what());
      }
    } else {
      const long exponent = std::max<long>(static_cast<long>(fmode.digits) - 15, 5);
      tolerance = Scalar::of(10, fmode).pow(-exponent);
    }
  }
  return Resolved{mode, *q, parse_family(config.family), a, b,
                  config.order == 0 ? default_order(config.command) : config.order, tolerance};
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  RunConfig config;
  CLI::App app{"q-hypergeometric Turanian certification and identity checks", "qturan"};
  app.require_subcommand(1, 1);

  app.add_option("--family", config.family, "heine-f, heine-f-tilde or g");
  app.add_option("--q", config.q, "base q in (0,1), e.g. 1/2");
  app.add_option("--p", config.p, "square root of q; keeps half powers exact");
  app.add_option("--mu", config.mu, "family parameter mu");
  app.add_option("--alpha", config.alpha, "first shift");
  app.add_option("--beta", config.beta, "second shift");
  app.add_option("--mu-grid", config.mu_grid, "start:stop:step (scan)");
  app.add_option("--alpha-grid", config.alpha_grid, "start:stop:step (scan)");
  app.add_option("--beta-grid", config.beta_grid, "start:stop:step (scan)");
  app.add_option("--a", config.a, "upper parameters of g, comma separated");
  app.add_option("--b", config.b, "lower parameters of g, comma separated");
  app.add_option("--nu", config.nu, "product formula parameter");
  app.add_option("--eta", config.eta, "product formula parameter");
  app.add_option("--x", config.x, "evaluation point");
  app.add_option("--y", config.y, "q-Bessel argument");
  app.add_option("--m", config.m, "largest coefficient index for finite identities");
  app.add_option("--q-seq", config.q_sequence, "q values for the q -> 1 study");
  app.add_option("--order", config.order, "number of series coefficients M");
  app.add_option("--mode", config.mode, "exact or float");
  app.add_option("--digits", config.digits, "Float precision in decimal digits");
  app.add_option("--identity", config.identity,
                 "rahman, finite-sum, connection, linearization, kummer, q-limit, recqgamma, "
                 "gamma-ratio, substitution");
  app.add_option("--tolerance", config.tolerance, "relative residual threshold (Float)");
  app.add_option("--json", config.json_path, "write the JSON report here ('-' for stdout)");
  app.add_option("--csv", config.csv_path, "write the flat table here ('-' for stdout)");
  app.add_option("--threads", config.threads, "scan worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", config.timing, "record wall-clock timing in the report");

  const std::pair<const char*, Command> commands[] = {
      {"eval", Command::Eval},       {"turanian", Command::Turanian},
      {"conditions", Command::Conditions}, {"verify", Command::Verify},
      {"scan", Command::Scan},       {"report", Command::Report}};
  const char* descriptions[] = {"series coefficients and values of a family",
                                "sign certificate of one Turanian",
                                "chain conditions and majorization for --a/--b",
                                "check one identity",
                                "sign certificates over parameter grids",
                                "run the built-in battery of checks"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    sub->fallthrough();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) config.command = commands[i].second;
  }
  return config;
}

}  // namespace qturan::cli
