#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "config.hpp"
#include "run.hpp"

namespace {

// Whole scan command on a 3x3x3 grid; the argument is the pool size.
void BM_ScanGrid(benchmark::State& state) {
  qturan::cli::RunConfig config;
  config.command = qturan::cli::Command::Scan;
  config.family = "heine-f";
  config.mu_grid = "1:2:0.5";
  config.alpha_grid = "0.5:1.5:0.5";
  config.beta_grid = "0.5:1.5:0.5";
  config.order = 30;
  config.json_path = "-";
  config.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::ostringstream out;
    std::ostringstream err;
    benchmark::DoNotOptimize(qturan::cli::run(config, out, err));
  }
}
BENCHMARK(BM_ScanGrid)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
