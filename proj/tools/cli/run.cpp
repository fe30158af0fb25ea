#include "run.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "qturan/conditions.hpp"
#include "qturan/errors.hpp"
#include "qturan/identities.hpp"
#include "qturan/series.hpp"

namespace qturan::cli {

namespace {

std::string str(const Scalar& x) { return x.to_string(); }

std::vector<std::string> parse_list_raw(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string join(const ParamVector& v) {
  std::string out;
  for (const auto& e : v) out += (out.empty() ? "" : ",") + str(e);
  return out;
}

Json scalars(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(str(x));
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

FamilySpec family_spec(const Resolved& r) {
  if (r.family == Family::GNormalized && r.a.empty() && r.b.empty()) {
    throw ConfigError("family g needs --a and --b");
  }
  return FamilySpec{r.family, r.a, r.b};
}

std::vector<Scalar> grid_or_single(const std::optional<std::string>& grid, const std::string& single,
                                   const Mode& mode, const std::string& name) {
  if (grid) return parse_grid(*grid, mode, name + "-grid");
  return {parse_param(single, mode, name)};
}

bool float_only(const std::string& identity) {
  return identity == "connection" || identity == "gamma-ratio" || identity == "substitution" ||
         identity == "q-limit";
}

unsigned float_digits(const Resolved& r) {
  return r.mode.is_exact() ? default_digits() : r.mode.digits;
}

Json point_json(const TuranianSpec& spec) {
  Json p = Json::object();
  p["family"] = to_string(spec.family.kind);
  p["mu"] = str(spec.mu);
  p["alpha"] = str(spec.alpha);
  p["beta"] = str(spec.beta);
  return p;
}

std::string point_text(const TuranianSpec& spec) {
  return to_string(spec.family.kind) + " mu=" + str(spec.mu) + " alpha=" + str(spec.alpha) +
         " beta=" + str(spec.beta);
}

void add_sign(Report& report, const TuranianSpec& spec, const SignReport& s) {
  Json v = point_json(spec);
  v.update(sign_json(s));
  report.verdicts.push_back(v);
  Json m = point_json(spec);
  m["min_margin"] = str(s.min_margin);
  report.margins.push_back(m);
  report.ok = report.ok && s.matches_prediction;
  report.lines.push_back(point_text(spec) + ": " + to_string(s.verdict) + " (predicted " +
                         to_string(s.predicted) + ", m >= " + std::to_string(s.first_index) +
                         ")" + (s.matches_prediction ? "" : "  MISMATCH"));
}

void add_residual(Report& report, const Residual& r, const Scalar& tolerance, Json params) {
  Json j = residual_json(r, tolerance);
  j["params"] = std::move(params);
  report.residuals.push_back(j);
  const bool pass = r.passes(tolerance);
  report.ok = report.ok && pass;
  report.lines.push_back(r.identity + ": " +
                         (r.exact_zero ? std::string("exact_zero") : "max_rel=" + str(r.max_rel)) +
                         (pass ? "" : "  FAIL"));
}

// ---- eval ----

void eval_command(const RunConfig& config, const Resolved& r, Report& report) {
  const FamilySpec family = family_spec(r);
  const auto mus = grid_or_single(config.mu_grid, config.mu, r.mode, "mu");
  report.csv_header = {"family", "mu", "q", "m", "coefficient"};
  for (const auto& mu : mus) {
    std::optional<TruncatedSeries> s;
    switch (family.kind) {
      case Family::HeineF: s = heine_f_series(mu, r.q, r.order); break;
      case Family::HeineFTilde:
        s = r.mode.is_exact() ? heine_f_tilde_series(mu, r.q, r.order)
                              : heine_f_tilde_absolute(mu, r.q, r.order);
        break;
      case Family::GNormalized: s = g_series(family.a, family.b, mu, r.q, r.order); break;
    }
    Json v = Json::object();
    v["family"] = to_string(family.kind);
    v["mu"] = str(mu);
    v["normalization"] = s->family_label();
    v["coefficients"] = scalars(s->coeffs());
    if (s->tail_note()) v["tail_note"] = *s->tail_note();
    for (std::size_t m = 0; m < s->coeffs().size(); ++m) {
      report.csv_rows.push_back({to_string(family.kind), str(mu), str(r.q.q()), std::to_string(m),
                                 str((*s)[m])});
    }
    std::string line = to_string(family.kind) + " mu=" + str(mu) + ": c_0.." +
                       std::to_string(s->order()) + " computed";
    if (config.x) {
      const unsigned digits = float_digits(r);
      const Mode fm = Mode::floating(digits);
      const QBase qf = QBase::from_p(r.q.p().to_float(digits));
      const Scalar x = Scalar::parse(*config.x, fm);
      const Scalar value = family_value(family, mu.to_float(digits), x, qf);
      v["x"] = str(x);
      v["value"] = str(value);
      line += ", F(" + str(x) + ") = " + str(value);
    }
    report.values.push_back(v);
    report.lines.push_back(line);
  }
}

// ---- turanian ----

void turanian_command(const RunConfig& config, const Resolved& r, Report& report) {
  const TuranianSpec spec{family_spec(r), parse_param(config.mu, r.mode, "mu"),
                          parse_param(config.alpha, r.mode, "alpha"),
                          parse_param(config.beta, r.mode, "beta"), r.q, r.order};
  add_sign(report, spec, sign_certificate(spec));
  report.csv_header = {"family", "mu", "alpha", "beta", "q", "m", "coefficient"};
  try {
    const TruncatedSeries delta = turanian_series(spec);
    Json v = point_json(spec);
    v["normalization"] = turanian_expansion(spec).normalization;
    v["coefficients"] = scalars(delta.coeffs());
    report.values.push_back(v);
    for (std::size_t m = 0; m < delta.coeffs().size(); ++m) {
      report.csv_rows.push_back({to_string(spec.family.kind), str(spec.mu), str(spec.alpha),
                                 str(spec.beta), str(r.q.q()), std::to_string(m), str(delta[m])});
    }
  } catch (const OffGridError& e) {
    // The weight is only known as an enclosure; the certificate above covers it.
    Json v = point_json(spec);
    v["coefficients"] = nullptr;
    v["note"] = e.what();
    report.values.push_back(v);
  }
}

// ---- conditions ----

void conditions_command(const Resolved& r, Report& report) {
  if (r.a.empty() && r.b.empty()) throw ConfigError("conditions needs --a and/or --b");
  const CDVectors cd = derive_cd(r.a, r.b, r.q);
  const std::size_t t = r.a.size();
  const std::size_t s = r.b.size();
  const TheoremCase tc = theorem_case(r.a, r.b, r.q);
  const ChainVerdict chain = majorization_sufficiency(cd.c, cd.d);

  std::vector<Scalar> grid;
  for (long i = 1; i <= 40; ++i) grid.push_back(Scalar::of(mpq_class(i, 4), r.mode));
  const RtsProbe probe = rts_monotonicity_probe(cd.c, cd.d, grid);

  Json v = Json::object();
  v["a"] = join(r.a);
  v["b"] = join(r.b);
  v["c"] = scalars(cd.c.entries());
  v["d"] = scalars(cd.d.entries());
  v["increasing_chain"] = t >= s ? Json(increasing_chain_holds(cd.c, cd.d)) : Json(nullptr);
  v["decreasing_chain"] = t <= s ? Json(decreasing_chain_holds(cd.c, cd.d)) : Json(nullptr);
  v["case_a"] = tc.case_a;
  v["case_b"] = tc.case_b;
  v["via_majorization"] = chain.via_majorization;
  if (chain.witness_subvector) {
    v["witness_subvector"] = *chain.witness_subvector;
  } else {
    v["witness_subvector"] = nullptr;
  }
  v["implication_holds"] = chain.implication_holds;
  v["rts_observed"] = to_string(probe.observed);
  v["rts_predicted"] = probe.predicted ? Json(to_string(*probe.predicted)) : Json(nullptr);
  v["rts_consistent"] = probe.consistent;
  report.verdicts.push_back(v);
  report.ok = chain.implication_holds && probe.consistent;

  report.csv_header = {"a", "b", "case_a", "case_b", "via_majorization", "rts_observed",
                       "rts_consistent"};
  report.csv_rows.push_back({join(r.a), join(r.b), tc.case_a ? "true" : "false",
                             tc.case_b ? "true" : "false",
                             chain.via_majorization ? "true" : "false", to_string(probe.observed),
                             probe.consistent ? "true" : "false"});
  const std::string which = tc.case_a ? "(a): Delta_g <= 0" : tc.case_b ? "(b): Delta_g >= 0" : "none";
  report.lines.push_back("chain condition " + which);
  report.lines.push_back(std::string("majorization witness: ") +
                         (chain.via_majorization ? "found" : "none") +
                         (chain.implication_holds ? "" : "  COUNTEREXAMPLE"));
  report.lines.push_back("R(y) " + to_string(probe.observed) +
                         (probe.consistent ? "" : "  INCONSISTENT"));
}

// ---- verify ----

void verify_command(const RunConfig& config, const Resolved& r, Report& report) {
  const std::string& id = config.identity;
  if (id.empty()) throw ConfigError("verify needs --identity");
  const auto param = [&](const std::string& text, const std::string& name) {
    return parse_param(text, r.mode, name);
  };
  Json params = Json::object();
  report.csv_header = {"identity", "mode", "max_abs", "max_rel", "exact_zero", "order_checked"};

  const auto record = [&](const Residual& res, Json p) {
    add_residual(report, res, r.tolerance, std::move(p));
    report.csv_rows.push_back({res.identity, res.mode.to_string(), str(res.max_abs),
                               str(res.max_rel), res.exact_zero ? "true" : "false",
                               std::to_string(res.order_checked)});
  };

  if (id == "rahman" || id == "finite-sum") {
    const Scalar nu = param(config.nu, "nu");
    const Scalar eta = param(config.eta, "eta");
    params["nu"] = str(nu);
    params["eta"] = str(eta);
    record(id == "rahman" ? verify_rahman_product(nu, eta, r.q, r.order)
                          : verify_finite_sum_identity(nu, eta, r.q, config.m),
           params);
  } else if (id == "linearization" || id == "kummer") {
    const Scalar mu = param(config.mu, "mu");
    const Scalar alpha = param(config.alpha, "alpha");
    const Scalar beta = param(config.beta, "beta");
    params = {{"mu", str(mu)}, {"alpha", str(alpha)}, {"beta", str(beta)}};
    if (id == "kummer") {
      record(verify_kummer_linearization(mu, alpha, beta, r.order), params);
    } else {
      record(verify_linearization(mu, alpha, beta, r.q, r.order), params);
      if (alpha.as_integer() == 1) {
        params["path"] = "unit-shift";
        record(verify_linearization(mu, alpha, beta, r.q, r.order, LinearizationPath::UnitShift),
               params);
      }
    }
  } else if (id == "recqgamma") {
    const Scalar mu = param(config.mu, "mu");
    const Scalar beta = param(config.beta, "beta");
    record(verify_recqgamma(mu, beta, r.q, config.m), {{"mu", str(mu)}, {"beta", str(beta)}});
  } else if (id == "connection") {
    const Scalar alpha = param(config.alpha, "alpha");
    const Scalar y = Scalar::parse(config.y, r.mode);
    record(verify_connection_formula(alpha, y, r.q), {{"alpha", str(alpha)}, {"y", str(y)}});
  } else if (id == "gamma-ratio") {
    const Scalar x = Scalar::parse(config.x.value_or("1/2"), r.mode);
    record(verify_gamma_ratio(x, config.m, r.q), {{"x", str(x)}, {"k", config.m}});
  } else if (id == "substitution") {
    const Scalar alpha = param(config.alpha, "alpha");
    const Scalar beta = param(config.beta, "beta");
    const Scalar y = Scalar::parse(config.y, r.mode);
    const SubstitutionProbe probe = rahman_substitution_probe(alpha, beta, y, r.q);
    params = {{"alpha", str(alpha)}, {"beta", str(beta)}, {"y", str(y)}};
    report.residuals.push_back(residual_json(probe.y_squared, r.tolerance));
    report.residuals.push_back(residual_json(probe.y_fourth, r.tolerance));
    const bool pass = probe.consistent_substitution == "-y^2/4";
    report.verdicts.push_back({{"check", "substitution"},
                               {"consistent_substitution", probe.consistent_substitution},
                               {"params", params},
                               {"passes", pass}});
    report.ok = pass;
    report.lines.push_back("substitution consistent with z = " + probe.consistent_substitution);
  } else if (id == "q-limit") {
    const Scalar mu = param(config.mu, "mu");
    const Scalar alpha = param(config.alpha, "alpha");
    const Scalar beta = param(config.beta, "beta");
    const Scalar x = Scalar::parse(config.x.value_or("1/2"), r.mode);
    std::vector<Scalar> qs;
    for (const auto& text : parse_list_raw(config.q_sequence)) qs.push_back(Scalar::parse(text, r.mode));
    const auto study = q_to_1_limit_study(mu, alpha, beta, x, qs, r.mode.digits);
    params = {{"mu", str(mu)}, {"alpha", str(alpha)}, {"beta", str(beta)}, {"x", str(x)}};
    bool decreasing = true;
    for (std::size_t i = 0; i < study.size(); ++i) {
      Json j = residual_json(study[i], r.tolerance);
      j.erase("passes");
      j["params"] = params;
      report.residuals.push_back(j);
      report.lines.push_back(study[i].identity + ": deviation " + str(study[i].max_rel));
      if (i > 0 && !(study[i].max_rel < study[i - 1].max_rel)) decreasing = false;
    }
    report.verdicts.push_back({{"check", "q-limit deviations strictly decrease"},
                               {"passes", decreasing}});
    report.ok = decreasing;
    report.lines.push_back(std::string("deviations strictly decrease: ") + (decreasing ? "yes" : "NO"));
  } else {
    throw ConfigError("unknown identity '" + id + "'");
  }
}

// ---- scan ----

struct PointOutcome {
  TuranianSpec spec;
  std::optional<SignReport> sign;
  std::string error;
};

void scan_command(const RunConfig& config, const Resolved& r, Report& report) {
  const FamilySpec family = family_spec(r);
  const auto mus = grid_or_single(config.mu_grid, config.mu, r.mode, "mu");
  const auto alphas = grid_or_single(config.alpha_grid, config.alpha, r.mode, "alpha");
  const auto betas = grid_or_single(config.beta_grid, config.beta, r.mode, "beta");

  std::vector<PointOutcome> points;
  for (const auto& mu : mus) {
    for (const auto& alpha : alphas) {
      for (const auto& beta : betas) {
        points.push_back({TuranianSpec{family, mu, alpha, beta, r.q, r.order}, {}, {}});
      }
    }
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        points[i].sign = sign_certificate(points[i].spec);
      } catch (const Error& e) {
        points[i].error = e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(points.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  report.csv_header = {"family", "mu", "alpha", "beta", "q", "verdict", "predicted",
                       "matches", "min_margin", "first_violation"};
  for (const auto& p : points) {
    if (!p.sign) {
      ++report.errors;
      Json v = point_json(p.spec);
      v["error"] = p.error;
      report.verdicts.push_back(v);
      report.lines.push_back(point_text(p.spec) + ": error: " + p.error);
      report.csv_rows.push_back({to_string(p.spec.family.kind), str(p.spec.mu), str(p.spec.alpha),
                                 str(p.spec.beta), str(r.q.q()), "error", "", "", "", ""});
      continue;
    }
    add_sign(report, p.spec, *p.sign);
    const auto& s = *p.sign;
    report.csv_rows.push_back({to_string(p.spec.family.kind), str(p.spec.mu), str(p.spec.alpha),
                               str(p.spec.beta), str(r.q.q()), to_string(s.verdict),
                               to_string(s.predicted), s.matches_prediction ? "true" : "false",
                               str(s.min_margin),
                               s.first_violation ? std::to_string(*s.first_violation) : ""});
  }
}

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + path);
  file << content;
}

}  // namespace

Json Report::to_json() const {
  Json j = Json::object();
  j["config"] = config;
  j["verdicts"] = verdicts;
  j["residuals"] = residuals;
  j["margins"] = margins;
  if (!values.empty()) j["values"] = values;
  j["timing"] = timing;
  j["passed"] = ok && errors == 0;
  return j;
}

std::string Report::to_csv() const {
  std::string out;
  const auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_escape(fields[i]);
    out += '\n';
  };
  line(csv_header);
  for (const auto& row : csv_rows) line(row);
  return out;
}

Json residual_json(const Residual& r, const Scalar& tolerance) {
  Json j = Json::object();
  j["identity"] = r.identity;
  j["mode"] = r.mode.to_string();
  j["max_abs"] = str(r.max_abs);
  j["max_rel"] = str(r.max_rel);
  j["order_checked"] = r.order_checked;
  j["exact_zero"] = r.exact_zero;
  j["worst_index"] = r.worst_index ? Json(*r.worst_index) : Json(nullptr);
  j["passes"] = r.passes(tolerance);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json sign_json(const SignReport& s) {
  Json j = Json::object();
  j["verdict"] = to_string(s.verdict);
  j["predicted"] = to_string(s.predicted);
  j["matches_prediction"] = s.matches_prediction;
  j["first_index"] = s.first_index;
  j["leading_zero"] = s.leading_zero;
  j["first_violation"] = s.first_violation ? Json(*s.first_violation) : Json(nullptr);
  j["order_checked"] = s.order_checked;
  j["chain_condition"] = s.chain_condition;
  j["enclosure_factors"] = s.enclosure_factors;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json config_json(const RunConfig& c, const Resolved& r) {
  Json j = Json::object();
  j["command"] = to_string(c.command);
  j["mode"] = r.mode.to_string();
  j["digits"] = r.mode.is_exact() ? Json(nullptr) : Json(r.mode.digits);
  j["q"] = str(r.q.q());
  j["p"] = str(r.q.p());
  j["family"] = to_string(r.family);
  j["a"] = scalars(r.a.entries());
  j["b"] = scalars(r.b.entries());
  const auto opt = [](const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); };
  j["mu"] = c.mu;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["mu_grid"] = opt(c.mu_grid);
  j["alpha_grid"] = opt(c.alpha_grid);
  j["beta_grid"] = opt(c.beta_grid);
  j["nu"] = c.nu;
  j["eta"] = c.eta;
  j["x"] = opt(c.x);
  j["y"] = c.y;
  j["m"] = c.m;
  j["q_sequence"] = c.q_sequence;
  j["order"] = r.order;
  j["identity"] = c.identity.empty() ? Json(nullptr) : Json(c.identity);
  j["tolerance"] = str(r.tolerance);
  return j;
}

void execute(const RunConfig& given, Report& report) {
  RunConfig config = given;
  // Identities built on infinite products have no exact value; run them in Float.
  bool promoted = false;
  if (config.command == Command::Verify && float_only(config.identity) && config.mode == "exact") {
    config.mode = "float";
    promoted = true;
  }
  const Resolved r = resolve(config);
  report.config = config_json(config, r);
  if (promoted) report.config["mode_note"] = "identity " + config.identity + " runs in float mode";

  switch (config.command) {
    case Command::Eval: eval_command(config, r, report); break;
    case Command::Turanian: turanian_command(config, r, report); break;
    case Command::Conditions: conditions_command(r, report); break;
    case Command::Verify: verify_command(config, r, report); break;
    case Command::Scan: scan_command(config, r, report); break;
    case Command::Report: run_battery(r, report); break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    execute(config, report);
  } catch (const ConfigError& e) {
    err << "qturan: " << e.what() << '\n';
    return kConfigError;
  } catch (const OffGridError& e) {
    err << "qturan: off-grid parameter: " << e.what() << '\n';
    return kConfigError;
  } catch (const ModeMismatchError& e) {
    err << "qturan: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "qturan: " << e.what() << " (mu=" << config.mu << " alpha=" << config.alpha
        << " beta=" << config.beta << ")\n";
    return kDomainError;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (config.timing) report.timing = {{"total_seconds", seconds}};

  const bool quiet = config.json_path == "-" || config.csv_path == "-";
  try {
    if (config.json_path) write_file(*config.json_path, report.to_json().dump(2) + "\n", out);
    if (config.csv_path) write_file(*config.csv_path, report.to_csv(), out);
  } catch (const ConfigError& e) {
    err << "qturan: " << e.what() << '\n';
    return kConfigError;
  }
  if (!quiet) {
    for (const auto& line : report.lines) out << line << '\n';
    if (config.timing) out << "elapsed " << seconds << " s\n";
    out << (report.errors ? "ERROR" : report.ok ? "PASS" : "FAIL") << '\n';
  }
  if (report.errors) return kDomainError;
  return report.ok ? kPass : kFail;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_command_line(argc, argv, out);
    if (!config) return kPass;
    return run(*config, out, err);
  } catch (const ConfigError& e) {
    err << "qturan: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace qturan::cli
