#include "plueckerfan/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace pf;

namespace {

Exec exec_of(const benchmark::State& state)
{
    return state.range(0) ? Exec::Parallel : Exec::Serial;
}

void straighten(benchmark::State& state)
{
    auto lat = build_M(6);
    for (auto _ : state) benchmark::DoNotOptimize(straighten_all(lat, exec_of(state)));
}

void membership(benchmark::State& state)
{
    auto lat = build_N(5);
    std::vector<Polynomial> ps;
    for (const auto& st : straighten_all(lat, Exec::Serial)) ps.push_back(st.relation);
    for (auto _ : state) benchmark::DoNotOptimize(membership_all(ps, 5, kDefaultTrials, 1, exec_of(state)));
}

void certify(benchmark::State& state)
{
    PluckerSetting s(6, false);
    auto h = cone_hrep(ConeTarget::Pbw, s);
    for (auto _ : state) benchmark::DoNotOptimize(certify_all(h, s, exec_of(state)));
}

void initial_forms(benchmark::State& state)
{
    PluckerSetting s(5, true);
    auto h = cone_hrep(ConeTarget::Ssyt, s);
    auto pts = sample_cone(h, interior_witness(s.m.lattice), 200, 1, 4).points;
    for (auto _ : state) benchmark::DoNotOptimize(initial_forms_all(pts, s.m, s.m_rel, exec_of(state)));
}

}  // namespace

// Argument 0: serial reference, 1: OpenMP.
BENCHMARK(straighten)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(membership)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(initial_forms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
