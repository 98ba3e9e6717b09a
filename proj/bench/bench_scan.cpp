// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "seminorm/monoids.hpp"
#include "seminorm/weak_closure.hpp"

using namespace seminorm;
using kernels::Execution;

namespace {

MonomialIdeal family(std::int64_t n) { return MonomialIdeal(2, {{n, 0}, {2, n - 2}, {1, n}, {0, n + 1}}); }

template <Execution E>
void integral(benchmark::State& state) {
    const auto ideal = family(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(integral_closure(ideal, E));
}

template <Execution E>
void weak_char0(benchmark::State& state) {
    const auto ideal = family(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weak_closure_char0(ideal, E));
}

template <Execution E>
void weak_char2(benchmark::State& state) {
    const auto ideal = family(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weak_closure_charp(ideal, 2, 3, E));
}

template <Execution E>
void seminormal_box(benchmark::State& state) {
    const AffineMonoid m(2, {{2, 0}, {3, 0}, {1, 2}, {0, 3}});
    const std::int64_t b = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(is_seminormal_monoid(m, {b, b}, E));
}

} // namespace

BENCHMARK(integral<Execution::serial>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(integral<Execution::parallel>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(weak_char0<Execution::serial>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(weak_char0<Execution::parallel>)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(weak_char2<Execution::serial>)->Arg(6)->Arg(10);
BENCHMARK(weak_char2<Execution::parallel>)->Arg(6)->Arg(10);
BENCHMARK(seminormal_box<Execution::serial>)->Arg(10)->Arg(20);
BENCHMARK(seminormal_box<Execution::parallel>)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
