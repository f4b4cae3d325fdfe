// Closure, classification, and propagation timings across the system sizes
// the library targets (N = 2..10).

#include <benchmark/benchmark.h>

#include "dynlie/atomic_system.hpp"
#include "dynlie/lie_algebra.hpp"
#include "dynlie/reachability.hpp"

#include <random>
#include <vector>

namespace {

using namespace dynlie;

HamiltonianSet system_for(int f_lo, int f_up, std::vector<Polarization> pols) {
    AtomicSystemSpec spec;
    spec.lower = {f_lo, -1.0};
    spec.upper = {f_up, 1.0};
    spec.dipole = 1.0;
    spec.polarizations = std::move(pols);
    return build_hamiltonians(spec);
}

GeneratorSet generators_for(const HamiltonianSet& hset) {
    std::vector<Matrix> hams{hset.h0};
    for (const auto& c : hset.controls) hams.push_back(c.matrix);
    return GeneratorSet::from_hamiltonians(hams);
}

void BM_ClosureSu4(benchmark::State& state) {
    const GeneratorSet gens = generators_for(system_for(
        0, 1, {Polarization::Pi, Polarization::SigmaPlus, Polarization::SigmaMinus}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_closure(gens).dimension());
    }
}
BENCHMARK(BM_ClosureSu4);

void BM_ClosureSp3(benchmark::State& state) {
    const GeneratorSet gens =
        generators_for(system_for(1, 1, {Polarization::Pi, Polarization::SigmaPlus}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_closure(gens).dimension());
    }
}
BENCHMARK(BM_ClosureSp3);

void BM_ClosureSu8(benchmark::State& state) {
    const GeneratorSet gens = generators_for(system_for(
        1, 2, {Polarization::Pi, Polarization::SigmaPlus, Polarization::SigmaMinus}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_closure(gens).dimension());
    }
}
BENCHMARK(BM_ClosureSu8);

void BM_ClosureSp5(benchmark::State& state) {
    const GeneratorSet gens = generators_for(system_for(
        2, 2, {Polarization::Pi, Polarization::SigmaPlus, Polarization::SigmaMinus}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_closure(gens).dimension());
    }
}
BENCHMARK(BM_ClosureSp5);

void BM_FindSymplecticFormN6(benchmark::State& state) {
    const GeneratorSet gens = generators_for(system_for(
        1, 1, {Polarization::Pi, Polarization::SigmaPlus, Polarization::SigmaMinus}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_symplectic_form(gens).has_value());
    }
}
BENCHMARK(BM_FindSymplecticFormN6);

void BM_FindSymplecticFormN10(benchmark::State& state) {
    const GeneratorSet gens = generators_for(system_for(
        2, 2, {Polarization::Pi, Polarization::SigmaPlus, Polarization::SigmaMinus}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_symplectic_form(gens).has_value());
    }
}
BENCHMARK(BM_FindSymplecticFormN10);

void BM_ClassifyFullAnalysisN10(benchmark::State& state) {
    AtomicSystemSpec spec;
    spec.lower = {2, -1.0};
    spec.upper = {2, 1.0};
    spec.dipole = 1.0;
    spec.polarizations = {Polarization::Pi, Polarization::SigmaPlus,
                          Polarization::SigmaMinus};
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_system(spec).global.dimension);
    }
}
BENCHMARK(BM_ClassifyFullAnalysisN10);

void BM_Propagate(benchmark::State& state) {
    const HamiltonianSet hset = system_for(
        1, 1, {Polarization::Pi, Polarization::SigmaPlus, Polarization::SigmaMinus});
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    ControlSchedule schedule;
    for (int s = 0; s < static_cast<int>(state.range(0)); ++s) {
        ScheduleSegment seg;
        seg.duration = 0.2;
        for (std::size_t m = 0; m < hset.controls.size(); ++m) {
            seg.amplitudes.push_back(amp(gen));
        }
        schedule.segments.push_back(std::move(seg));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagate(hset, schedule)(0, 0));
    }
}
BENCHMARK(BM_Propagate)->Arg(10)->Arg(100);

}  // namespace
