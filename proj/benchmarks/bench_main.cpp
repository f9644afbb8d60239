#include <benchmark/benchmark.h>

#include <vector>

#include "flr/descent.hpp"
#include "flr/dfl.hpp"
#include "flr/dimacs.hpp"
#include "flr/experiment.hpp"
#include "flr/ilr.hpp"
#include "flr/rng.hpp"

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    flr::CounterRng rng(flr::splitmix64(seed));
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.draw(i);
    return v;
}

void BM_TNormFold(benchmark::State& state) {
    const auto xs = random_vector(static_cast<std::size_t>(state.range(0)), 1);
    const auto kind = flr::TNormKind::lukasiewicz();
    for (auto _ : state) {
        benchmark::DoNotOptimize(flr::t_norm_fold(kind, xs));
    }
}
BENCHMARK(BM_TNormFold)->Arg(8)->Arg(91);

void BM_AggregateGrad(benchmark::State& state) {
    const auto xs = random_vector(static_cast<std::size_t>(state.range(0)), 2);
    const auto kind = flr::AggregatorKind::gme(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(flr::aggregate_grad(kind, xs));
    }
}
BENCHMARK(BM_AggregateGrad)->Arg(8)->Arg(91);

void BM_Uf20Evaluate(benchmark::State& state) {
    const flr::CnfInstance inst = flr::parse_dimacs_file(std::string(FLR_DATA_DIR) + "/uf20/uf20-01.cnf");
    const auto formula = flr::cnf_to_formula(inst);
    const auto config = flr::config_by_name("lukasiewicz");
    const auto t = random_vector(20, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(flr::evaluate(config, *formula, t));
    }
}
BENCHMARK(BM_Uf20Evaluate);

void BM_IlrIteration(benchmark::State& state) {
    const flr::CnfInstance inst = flr::parse_dimacs_file(std::string(FLR_DATA_DIR) + "/uf20/uf20-01.cnf");
    const auto formula = flr::cnf_to_formula(inst);
    const auto config = flr::config_by_name("lukasiewicz");
    const auto t0 = random_vector(20, 4);
    flr::IlrParams params;
    params.max_iters = 1;
    params.converge_patience = 1000;  // force exactly one backward step
    for (auto _ : state) {
        benchmark::DoNotOptimize(flr::ilr_run(config, *formula, t0, 1.0, params));
    }
}
BENCHMARK(BM_IlrIteration);

void BM_AdamStep(benchmark::State& state) {
    const flr::CnfInstance inst = flr::parse_dimacs_file(std::string(FLR_DATA_DIR) + "/uf20/uf20-01.cnf");
    const auto formula = flr::cnf_to_formula(inst);
    flr::SurrogateLoss loss{flr::config_by_name("lukasiewicz"), formula, random_vector(20, 5), 1.0, 0.1,
                            flr::Norm::L1};
    flr::AdamParams params;
    params.iterations = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(flr::adam_minimize(loss, params, 0));
    }
}
BENCHMARK(BM_AdamStep);

void BM_ChairGradient(benchmark::State& state) {
    const flr::KnowledgeBase kb = flr::load_kb_file(std::string(FLR_DATA_DIR) + "/chair.json");
    const auto config = flr::config_by_name("product");
    for (auto _ : state) {
        benchmark::DoNotOptimize(flr::dfl_grad(config, kb));
    }
}
BENCHMARK(BM_ChairGradient);

}  // namespace

BENCHMARK_MAIN();
