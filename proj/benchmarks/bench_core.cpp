#include <benchmark/benchmark.h>

#include "darb/analytic.hpp"
#include "darb/experiments.hpp"
#include "darb/montecarlo.hpp"
#include "darb/optimizer.hpp"

using namespace darb;

namespace {

void BM_RandomUnitary(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto method = state.range(1) == 0 ? BeamMethod::kHaar : BeamMethod::kPhaseDft;
  std::uint64_t t = 0;
  for (auto _ : state) {
    const auto b = random_unitary(Seed{42, t++}, l, method);
    benchmark::DoNotOptimize(b.phi.data());
  }
}
BENCHMARK(BM_RandomUnitary)->Args({4, 0})->Args({4, 1})->Args({18, 0})->Args({18, 1});

void BM_MonteCarloTrialPipeline(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int l = static_cast<int>(state.range(1));
  SystemConfig cfg;
  cfg.k_users = k;
  cfg.l_beams = l;
  const auto layout = place_users(Seed{7, 0}, k, cfg.area_side_m);
  std::uint64_t t = 0;
  for (auto _ : state) {
    const Seed trial_seed = Seed{7, 0}.sub2(stream_tag::kTrial, t++);
    const auto h = draw_channels(trial_seed, layout, l);
    const auto phi = random_unitary(trial_seed, l, BeamMethod::kPhaseDft);
    const auto table = compute_sinr(h, phi, cfg.p_t, cfg.sigma2);
    const auto outcome = schedule_with_threshold(table, 0.0, cfg.q_bits);
    benchmark::DoNotOptimize(outcome.feedback_bits);
  }
}
BENCHMARK(BM_MonteCarloTrialPipeline)->Args({20, 4})->Args({100, 18});

void BM_SumRateIntegral(benchmark::State& state) {
  const LinkStats s{4, 10.0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_rate_integral(s));
  }
}
BENCHMARK(BM_SumRateIntegral)->Arg(16)->Arg(1000);

void BM_BestSinrCdf(benchmark::State& state) {
  const LinkStats s{static_cast<int>(state.range(0)), 1.0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_sinr_cdf(0.1, s));
  }
}
BENCHMARK(BM_BestSinrCdf)->Arg(4)->Arg(18);

void BM_AlternatingOptimize(benchmark::State& state) {
  EeProblem prob;
  prob.k_users = 100;
  prob.beta = path_loss(30.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alternating_optimize(prob, OptimizerConfig{}).ee);
  }
}
BENCHMARK(BM_AlternatingOptimize);

void BM_GridSearchOracle(benchmark::State& state) {
  EeProblem prob;
  prob.k_users = 100;
  prob.beta = path_loss(30.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_search_max(prob).ee);
  }
}
BENCHMARK(BM_GridSearchOracle);

}  // namespace

BENCHMARK_MAIN();
