#include "ostrowski/bounds.hpp"
#include "ostrowski/harness/checks.hpp"
#include "ostrowski/harness/corpus.hpp"
#include "ostrowski/harness/stieltjes.hpp"
#include "ostrowski/quadrature.hpp"

#include <benchmark/benchmark.h>

using namespace ostrowski;
namespace h = ostrowski::harness;

namespace {

std::vector<PwmFunction> sample(std::size_t n, int degree = 3) {
    h::CorpusConfig cfg;
    cfg.seed = 99;
    cfg.count = n;
    cfg.max_degree = degree;
    return h::gen_corpus(cfg);
}

void BM_ChainReport(benchmark::State& state) {
    const auto fs = sample(64);
    const HolderExponent hp(2.0);
    std::size_t i = 0;
    for (auto _ : state) {
        const PwmFunction& f = fs[i++ % fs.size()];
        benchmark::DoNotOptimize(chain_report(f, f.domain().quarter(), hp));
    }
}
BENCHMARK(BM_ChainReport);

// Cached profile: repeated queries at many x.
void BM_CompanionBoundsGrid(benchmark::State& state) {
    const auto fs = sample(16);
    const HolderExponent hp(1.5);
    for (auto _ : state) {
        for (const PwmFunction& f : fs) {
            const CompanionBounds cb(f);
            const Interval& iv = f.domain();
            for (int k = 0; k < 65; ++k) {
                const double x = iv.a() + (iv.midpoint() - iv.a()) * k / 64.0;
                benchmark::DoNotOptimize(cb.q(x));
                benchmark::DoNotOptimize(cb.q_holder(x, hp));
            }
        }
    }
}
BENCHMARK(BM_CompanionBoundsGrid);

void BM_Composite(benchmark::State& state) {
    const auto fs = sample(8);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        for (const PwmFunction& f : fs) {
            benchmark::DoNotOptimize(composite_integrate(f, n));
        }
    }
}
BENCHMARK(BM_Composite)->Arg(1)->Arg(16)->Arg(256);

void BM_Adaptive(benchmark::State& state) {
    const auto fs = sample(4);
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        for (const PwmFunction& f : fs) {
            benchmark::DoNotOptimize(adaptive_integrate(f, tol, {}, Certification::refined, 1u << 14));
        }
    }
}
BENCHMARK(BM_Adaptive)->Arg(2)->Arg(4);

void BM_StieltjesSum(benchmark::State& state) {
    const auto fs = sample(8);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        for (const PwmFunction& f : fs) {
            const auto K = h::PiecewiseKernel::companion(f.domain().quarter(), f.domain());
            benchmark::DoNotOptimize(h::stieltjes_sum(K, f, n));
        }
    }
}
BENCHMARK(BM_StieltjesSum)->Arg(1024)->Arg(4096);

void BM_WeightedVariation(benchmark::State& state) {
    const auto fs = sample(8);
    const double p = static_cast<double>(state.range(0)) / 2.0;
    for (auto _ : state) {
        for (const PwmFunction& f : fs) {
            const auto K = h::PiecewiseKernel::companion(0.2, f.domain());
            benchmark::DoNotOptimize(
                h::weighted_variation_integral(h::WeightFunction::abs_power(K, p), f));
        }
    }
}
BENCHMARK(BM_WeightedVariation)->Arg(2)->Arg(3)->Arg(4);  // p = 1, 1.5, 2

void BM_VerifyFunction(benchmark::State& state) {
    const auto fs = sample(8);
    h::VerifyConfig cfg;
    for (auto _ : state) {
        h::VerifySummary s;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            h::check_function(fs[i], "b", cfg, s);
        }
        benchmark::DoNotOptimize(s.checks);
    }
}
BENCHMARK(BM_VerifyFunction)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
