#include <benchmark/benchmark.h>

#include <random>

#include "xomega/analysis.hpp"
#include "xomega/certificate.hpp"
#include "xomega/group.hpp"
#include "xomega/omega_graph.hpp"
#include "xomega/schreier.hpp"

using namespace xomega;

static void BM_LevelOf(benchmark::State& state) {
  const OmegaGraph graph(OmegaWord::parse("01(110)"));
  std::int64_t z = -1'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(graph.level_of(z++));
}
BENCHMARK(BM_LevelOf);

static void BM_Growth(benchmark::State& state) {
  const auto omega = OmegaWord::parse("(10)");
  for (auto _ : state) benchmark::DoNotOptimize(growth_x_omega(omega, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Growth)->Arg(64)->Arg(128)->Arg(192)->Unit(benchmark::kMillisecond);

static void BM_OrbitalBall(benchmark::State& state) {
  const auto omega = OmegaWord::parse("(110)");
  for (auto _ : state) benchmark::DoNotOptimize(orbital_ball(omega, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OrbitalBall)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_Diameter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(diameter_gamma(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Diameter)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);

static void BM_CornerDistance(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corner_distance(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CornerDistance)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_BallCertificate(benchmark::State& state) {
  const OmegaGraph graph(OmegaWord::parse("(10)"));
  const auto ball = oracle_ball(graph, 0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(ball, 0));
  state.counters["vertices"] = static_cast<double>(ball.vertex_count());
}
BENCHMARK(BM_BallCertificate)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_Contraction(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto g = random_reduced_word(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(contraction_check(g));
}
BENCHMARK(BM_Contraction)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_EqualOnLevel(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto g = random_reduced_word(24, rng);
  const auto h = g * GroupWord::parse("b");
  for (auto _ : state) benchmark::DoNotOptimize(equal_on_level(g, h, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EqualOnLevel)->Arg(16)->Arg(32);
BENCHMARK_MAIN();
