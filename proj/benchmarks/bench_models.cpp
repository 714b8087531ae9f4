#include <benchmark/benchmark.h>

#include <numbers>

#include "slitfringe/fringe.hpp"
#include "slitfringe/nlad.hpp"
#include "slitfringe/numerics.hpp"
#include "slitfringe/schrodinger.hpp"
#include "slitfringe/types.hpp"

using namespace slitfringe;

namespace {
constexpr double kPi = std::numbers::pi;
}

static void BM_Fresnel(benchmark::State& state) {
    double z = 0.1;
    for (auto _ : state) {
        const FresnelValue v = fresnel(z);
        benchmark::DoNotOptimize(v);
        z += 1e-4;
        if (z > 40.0) z = 0.1;
    }
}
BENCHMARK(BM_Fresnel);

static void BM_RhoPoint(benchmark::State& state) {
    const SlitPair slits = standard_slits(Normalization::amplitude);
    double x = -20.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho(slits, 1.0 / kPi, x));
        x += 1e-3;
        if (x > 20.0) x = -20.0;
    }
}
BENCHMARK(BM_RhoPoint);

static void BM_RhoProfile(benchmark::State& state) {
    const SlitPair slits = standard_slits(Normalization::amplitude);
    const Grid g{-40.0, 40.0, static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho_profile(slits, 1.0 / kPi, g));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RhoProfile)->Arg(2001)->Arg(8001);

static void BM_FactorizedSetup(benchmark::State& state) {
    const NladParams params = standard_nlad_params();
    const SlitPair slits = standard_slits();
    const double t = static_cast<double>(state.range(0)) / kPi;
    for (auto _ : state) {
        const FactorizedEvolver ev(params, slits, t);
        benchmark::DoNotOptimize(ev.term_count());
    }
}
BENCHMARK(BM_FactorizedSetup)->Arg(1)->Arg(6);

static void BM_FactorizedProfile(benchmark::State& state) {
    const NladParams params = standard_nlad_params();
    const SlitPair slits = standard_slits();
    const double t = static_cast<double>(state.range(0)) / kPi;
    const Grid g{-40.0, 40.0, 8001};
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_factorized(params, slits, t, g));
    }
    state.SetItemsProcessed(state.iterations() * 8001);
}
BENCHMARK(BM_FactorizedProfile)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SpectralProfile(benchmark::State& state) {
    const NladParams params = standard_nlad_params();
    const SlitPair slits = standard_slits();
    const double t = static_cast<double>(state.range(0)) / kPi;
    const Grid g{-40.0, 40.0, 8001};
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_spectral(params, slits, t, g));
    }
    state.SetItemsProcessed(state.iterations() * 8001);
}
BENCHMARK(BM_SpectralProfile)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SpectralMass(benchmark::State& state) {
    const NladParams params = standard_nlad_params();
    const SlitPair slits = standard_slits();
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral_mass(params, slits, 1.0 / kPi, 120.0));
    }
}
BENCHMARK(BM_SpectralMass)->Unit(benchmark::kMillisecond);

static void BM_FindExtrema(benchmark::State& state) {
    const Grid g{-40.0, 40.0, 8001};
    const Profile w = evolve_factorized(standard_nlad_params(), standard_slits(),
                                        1.0 / kPi, g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_extrema(w, {0.2, 8.8}));
    }
}
BENCHMARK(BM_FindExtrema);

BENCHMARK_MAIN();
