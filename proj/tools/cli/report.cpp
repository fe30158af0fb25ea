#include <algorithm>

#include "qturan/identities.hpp"
#include "run.hpp"

namespace qturan::cli {

namespace {

void record(Report& report, const Residual& r, const Scalar& tolerance) {
  report.residuals.push_back(residual_json(r, tolerance));
  const bool pass = r.passes(tolerance);
  report.ok = report.ok && pass;
  report.lines.push_back(r.identity + ": " +
                         (r.exact_zero ? std::string("exact_zero") : "max_rel=" + r.max_rel.to_string()) +
                         (pass ? "" : "  FAIL"));
}

void certify(Report& report, const TuranianSpec& spec) {
  const SignReport s = sign_certificate(spec);
  Json v = Json::object();
  v["family"] = to_string(spec.family.kind);
  v["mu"] = spec.mu.to_string();
  v["alpha"] = spec.alpha.to_string();
  v["beta"] = spec.beta.to_string();
  v.update(sign_json(s));
  report.verdicts.push_back(v);
  report.margins.push_back({{"family", to_string(spec.family.kind)},
                            {"mu", spec.mu.to_string()},
                            {"min_margin", s.min_margin.to_string()}});
  report.ok = report.ok && s.matches_prediction;
  report.lines.push_back(to_string(spec.family.kind) + " mu=" + spec.mu.to_string() + " alpha=" +
                         spec.alpha.to_string() + " beta=" + spec.beta.to_string() + ": " +
                         to_string(s.verdict) + (s.matches_prediction ? "" : "  MISMATCH"));
}

}  // namespace

void run_battery(const Resolved& r, Report& report) {
  const Mode& mode = r.mode;
  const auto v = [&](long num, long den = 1) { return Scalar::of(mpq_class(num, den), mode); };
  const auto vec = [&](std::initializer_list<long> xs) {
    std::vector<Scalar> out;
    for (long x : xs) out.push_back(v(x));
    return ParamVector(out, true);
  };
  const QBase& q = r.q;
  const std::size_t order = std::min<std::size_t>(r.order, 30);

  record(report, verify_linearization(v(1), v(1), v(1), q, order), r.tolerance);
  record(report, verify_linearization(v(1, 2), v(2), v(1, 2), q, order), r.tolerance);
  record(report, verify_rahman_product(v(1, 2), v(3, 2), q, std::min<std::size_t>(order, 15)),
         r.tolerance);
  record(report, verify_finite_sum_identity(v(1), v(2), q, 8), r.tolerance);
  record(report, verify_recqgamma(v(1), v(1, 2), q, 6), r.tolerance);
  record(report, verify_kummer_linearization(v(1), v(2), v(1, 2), order), r.tolerance);

  const FamilySpec heine{Family::HeineF, {}, {}};
  const FamilySpec tilde{Family::HeineFTilde, {}, {}};
  const FamilySpec ex1{Family::GNormalized, vec({2, 3}), vec({1, 2})};
  const FamilySpec ex2{Family::GNormalized, vec({1, 1, 1}), vec({2, 2})};
  certify(report, TuranianSpec{heine, v(1), v(1), v(1), q, order});
  certify(report, TuranianSpec{tilde, v(1, 2), v(1), v(1), q, order});
  certify(report, TuranianSpec{ex1, v(1, 2), v(1), v(2), q, order});
  certify(report, TuranianSpec{ex2, v(1), v(2), v(2), q, order});

  // Float-only checks at the working (or default) precision.
  const unsigned digits = mode.is_exact() ? default_digits() : mode.digits;
  const Mode fm = Mode::floating(digits);
  const QBase qf = QBase::from_p(q.p().to_float(digits));
  const Scalar ftol = mode.is_exact() ? default_tolerance(fm) * Scalar::of(1000000, fm) : r.tolerance;
  record(report, verify_connection_formula(Scalar::parse("1/2", fm), Scalar::of(1, fm), qf), ftol);

  std::vector<Scalar> qs{Scalar::parse("0.9", fm), Scalar::parse("0.99", fm),
                         Scalar::parse("0.999", fm)};
  const auto study = q_to_1_limit_study(Scalar::of(1, fm), Scalar::of(1, fm), Scalar::of(1, fm),
                                        Scalar::parse("0.5", fm), qs, digits);
  bool decreasing = true;
  for (std::size_t i = 1; i < study.size(); ++i) {
    decreasing = decreasing && study[i].max_rel < study[i - 1].max_rel;
  }
  for (const auto& s : study) {
    Json j = residual_json(s, ftol);
    j.erase("passes");
    report.residuals.push_back(j);
  }
  report.verdicts.push_back({{"check", "q-limit deviations strictly decrease"}, {"passes", decreasing}});
  report.ok = report.ok && decreasing;
  report.lines.push_back(std::string("q-limit deviations strictly decrease: ") +
                         (decreasing ? "yes" : "NO"));
}

}  // namespace qturan::cli
