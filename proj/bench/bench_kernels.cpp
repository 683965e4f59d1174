#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "telescoper/cli/parser.hpp"
#include "telescoper/modular/modular.hpp"
#include "telescoper/picardfuchs/integrand.hpp"
#include "telescoper/picardfuchs/series.hpp"

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(TELESCOPER_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void series(benchmark::State& st, bool parallel) {
  auto g = tel::parse_laurent(read_data("laurent_v25_59.txt"), tel::ParseOptions{});
  tel::SeriesOptions opt;
  opt.parallel = parallel;
  for (auto _ : st) benchmark::DoNotOptimize(tel::constant_term_series(g, static_cast<int>(st.range(0)), opt));
}

void delta(benchmark::State& st, bool parallel) {
  auto H = tel::homogenize(tel::parse_rational("(x+y)/(x*y^2-t*(x^3-1))"));
  tel::ModularOptions opt;
  opt.parallel = parallel;
  opt.initial_points = static_cast<int>(st.range(0));
  for (auto _ : st) {
    std::mt19937_64 rng(7);
    benchmark::DoNotOptimize(tel::delta_matrix(H, 1, 1000003, opt, rng));
  }
}

void BM_SeriesParallel(benchmark::State& st) { series(st, true); }
void BM_SeriesSerial(benchmark::State& st) { series(st, false); }
void BM_DeltaMatrixParallel(benchmark::State& st) { delta(st, true); }
void BM_DeltaMatrixSerial(benchmark::State& st) { delta(st, false); }

}  // namespace

BENCHMARK(BM_SeriesParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaMatrixParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaMatrixSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
