#include <benchmark/benchmark.h>

#include "qturan/identities.hpp"
#include "qturan/qcore.hpp"
#include "qturan/series.hpp"
#include "qturan/turanian.hpp"

namespace {

using namespace qturan;

QBase half_base() { return QBase::from_q(Scalar::exact(1, 2)); }

void BM_HeineSeriesExact(benchmark::State& state) {
  const QBase q = half_base();
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(heine_f_series(Scalar::exact(3, 2), q, order));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HeineSeriesExact)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_CauchyProductExact(benchmark::State& state) {
  const QBase q = half_base();
  const auto order = static_cast<std::size_t>(state.range(0));
  const TruncatedSeries a = heine_f_series(Scalar::exact(1), q, order);
  const TruncatedSeries b = heine_f_series(Scalar::exact(2), q, order);
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_product(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CauchyProductExact)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_SignCertificate(benchmark::State& state) {
  const Family kind = static_cast<Family>(state.range(0));
  const Mode m = Mode::exact();
  FamilySpec family{kind, {}, {}};
  if (kind == Family::GNormalized) {
    family.a = ParamVector({Scalar::of(2, m), Scalar::of(3, m)}, true);
    family.b = ParamVector({Scalar::of(1, m), Scalar::of(2, m)}, true);
  }
  const TuranianSpec spec{family, Scalar::exact(1), Scalar::exact(1), Scalar::exact(1), half_base(), 60};
  for (auto _ : state) benchmark::DoNotOptimize(sign_certificate(spec));
}
BENCHMARK(BM_SignCertificate)
    ->Arg(static_cast<int>(Family::HeineF))
    ->Arg(static_cast<int>(Family::HeineFTilde))
    ->Arg(static_cast<int>(Family::GNormalized))
    ->Unit(benchmark::kMillisecond);

void BM_VerifyLinearization(benchmark::State& state) {
  const QBase q = half_base();
  const Scalar alpha = Scalar::exact(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_linearization(Scalar::exact(1), alpha, Scalar::exact(1, 2), q, 30));
  }
}
BENCHMARK(BM_VerifyLinearization)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_QGammaFloat(benchmark::State& state) {
  const Mode m = Mode::floating(static_cast<unsigned>(state.range(0)));
  const QBase q = QBase::from_q(Scalar::parse("0.5", m));
  const Scalar z = Scalar::parse("2.75", m);
  for (auto _ : state) benchmark::DoNotOptimize(qgamma(z, q));
}
BENCHMARK(BM_QGammaFloat)->Arg(30)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
