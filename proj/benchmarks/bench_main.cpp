#include <benchmark/benchmark.h>

#include <vector>

#include "ffopt/firefly.hpp"
#include "ffopt/objectives.hpp"

using namespace ffopt;

namespace {

void BM_objective_eval(benchmark::State& state, const char* name) {
    const Objective obj = make_objective(name);
    RandomSource rng(1);
    const std::vector<double> x = uniform_point(obj.space, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(obj.eval(x));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}

void BM_attractiveness(benchmark::State& state, FaConfig::Attractiveness form) {
    FaConfig cfg;
    cfg.attractiveness_form = form;
    double r = 0.0;
    for (auto _ : state) {
        r += 1e-9;  // defeat constant folding across iterations
        benchmark::DoNotOptimize(attractiveness(r, cfg));
    }
}

void BM_fa_generation(benchmark::State& state) {
    const Objective obj = make_objective("michalewicz", 2);
    FaConfig cfg;
    cfg.n = static_cast<std::size_t>(state.range(0));
    cfg.max_evaluations = ~0ULL >> 1;

    RandomSource rng(1);
    Evaluator ev(obj, cfg.max_evaluations);
    FireflyState st;
    for (std::size_t i = 0; i < cfg.n; ++i) {
        st.positions.push_back(uniform_point(obj.space, rng));
        st.intensities.push_back(-ev(st.positions.back()));
    }
    for (auto _ : state) {
        fa_step(st, ev, cfg, rng);
        benchmark::DoNotOptimize(st.best_value);
    }
}

void BM_fa_run_small(benchmark::State& state) {
    const Objective obj = make_objective("michalewicz", 2);
    FaConfig cfg;
    cfg.max_generations = 10;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        RandomSource rng(seed++);
        benchmark::DoNotOptimize(fa_run(obj, cfg, rng, StopRule{1e-5, 0}));
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_objective_eval, michalewicz_d16, "michalewicz");
BENCHMARK_CAPTURE(BM_objective_eval, dejong_d256, "dejong");
BENCHMARK_CAPTURE(BM_objective_eval, ackley_d128, "ackley");
BENCHMARK_CAPTURE(BM_objective_eval, shubert_d2, "shubert");
BENCHMARK_CAPTURE(BM_attractiveness, gaussian, FaConfig::Attractiveness::gaussian);
BENCHMARK_CAPTURE(BM_attractiveness, rational, FaConfig::Attractiveness::rational);
BENCHMARK(BM_fa_generation)->Arg(10)->Arg(40);
BENCHMARK(BM_fa_run_small)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
