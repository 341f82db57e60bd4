#include <benchmark/benchmark.h>

#include "ks7/classification.hpp"

using namespace ks7;

static void BM_SqrtMod(benchmark::State& state) {
    BigInt m = 224 * BigInt(state.range(0));
    BigInt a = mod_floor(BigInt(12345) * 12345, m);
    for (auto _ : state) benchmark::DoNotOptimize(sqrt_mod(a, m));
}
BENCHMARK(BM_SqrtMod)->Arg(41)->Arg(991)->Arg(19513)->Arg(999983);

static void BM_SqrtModPrefactored(benchmark::State& state) {
    BigInt m = 224 * BigInt(state.range(0));
    auto f = factorize(m);
    BigInt a = mod_floor(BigInt(12345) * 12345, m);
    for (auto _ : state) benchmark::DoNotOptimize(sqrt_mod(a, f));
}
BENCHMARK(BM_SqrtModPrefactored)->Arg(41)->Arg(19513);

static void BM_Factorize(benchmark::State& state) {
    BigInt n = BigInt("1000000007") * BigInt("998244353");
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize);

static void BM_ProfileSphere(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(profile_sphere(2285, 2244));
}
BENCHMARK(BM_ProfileSphere);

static void BM_ProfileCircle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(profile_circle(-335861, 580, -579));
}
BENCHMARK(BM_ProfileCircle);

static void BM_ProfileSpinCircle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(profile_spin_circle(0, 70, 5899));
}
BENCHMARK(BM_ProfileSpinCircle);

static void BM_EdiffeoSolve(benchmark::State& state) {
    EdiffeoProblem prob(41, mod_one(Rational::parse("115/287")), mod_one(Rational::parse("65/164")),
                        mod_one(Rational::parse("-33/82")));
    for (auto _ : state) benchmark::DoNotOptimize(ediffeo_solve(prob));
}
BENCHMARK(BM_EdiffeoSolve);

static void BM_EdiffeoSolveLarge(benchmark::State& state) {
    auto p = profile_circle(1, 56, 103);
    EdiffeoProblem prob(p.r, p.s1, p.s2, p.s3);
    for (auto _ : state) benchmark::DoNotOptimize(ediffeo_solve(prob, Orientation::Reversing));
}
BENCHMARK(BM_EdiffeoSolveLarge);

static void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_positively_curved(state.range(0), 1));
}
BENCHMARK(BM_Enumerate)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
