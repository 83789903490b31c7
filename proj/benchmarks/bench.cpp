#include <benchmark/benchmark.h>

#include "levelscope/cartier.hpp"
#include "levelscope/level.hpp"

using namespace levelscope;

namespace {

const std::vector<std::string> kXyz = {"x", "y", "z"};

void BM_poly_mul(benchmark::State& state) {
    Fp fp(11);
    MultiPoly f = MultiPoly::parse("y^2*z^3-x^5-2*z^5", fp, kXyz).pow(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * f);
    }
}
BENCHMARK(BM_poly_mul);

void BM_frobenius_expansion(benchmark::State& state) {
    Fp fp(static_cast<u64>(state.range(0)));
    MultiPoly f = MultiPoly::parse("y^2*z^3-x^5-2*z^5", fp, kXyz);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.pow(fp.modulus() - 1));
    }
}
BENCHMARK(BM_frobenius_expansion)->Arg(11)->Arg(13)->Arg(17);

void BM_level_chain(benchmark::State& state) {
    Fp fp(static_cast<u64>(state.range(0)));
    MultiPoly f = MultiPoly::parse("y^2*z^3-x^5-2*z^5", fp, kXyz);
    for (auto _ : state) {
        benchmark::DoNotOptimize(level_chain(f));
    }
}
BENCHMARK(BM_level_chain)->Arg(11)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_cartier_data(benchmark::State& state) {
    Fp fp(static_cast<u64>(state.range(0)));
    UniPoly h = UniPoly::parse("x^5+2", fp);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cartier_data(h, 2));
    }
}
BENCHMARK(BM_cartier_data)->Arg(11)->Arg(97);

}  // namespace

BENCHMARK_MAIN();
