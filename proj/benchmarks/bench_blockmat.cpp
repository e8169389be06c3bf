#include <benchmark/benchmark.h>

#include "hybridmat/block_matrix.hpp"
#include "hybridmat/instance.hpp"
#include "hybridmat/oracle.hpp"

using namespace hybridmat;

namespace {

SizeExpr P(const char* name) { return SizeExpr::param(name); }

PayloadFn dense_payload(SizeExpr rows, SizeExpr cols, long long salt) {
    return [rows, cols, salt](const ParamEnv& env, long long i,
                              long long j) -> std::optional<Rational> {
        if (i < 0 || j < 0 || i >= rows.eval(env) || j >= cols.eval(env)) return std::nullopt;
        return Rational(salt + 7 * i + j);
    };
}

BlockSpec two_by_two(const std::string& name, const char* rc, const char* cc, const char* rows,
                     const char* cols, long long salt) {
    BlockSpec spec(name, {SizeExpr(0), P(rc), P(rows)}, {SizeExpr(0), P(cc), P(cols)});
    for (int bi = 1; bi <= 2; ++bi)
        for (int bj = 1; bj <= 2; ++bj)
            spec.set_payload(bi, bj,
                             dense_payload(spec.block_rows(bi), spec.block_cols(bj),
                                           salt + 100 * bi + bj));
    return spec;
}

ParamEnv env_for(long long n) {
    return ParamEnv{{"n", n},     {"m", n},     {"p", n},    {"q", n / 3},
                    {"r", n / 2}, {"s", n / 4}, {"t", n / 2}};
}

void BM_SumEvaluate(benchmark::State& state) {
    BlockSpec a = two_by_two("a", "q", "r", "n", "m", 1);
    BlockSpec b = two_by_two("b", "s", "t", "n", "m", 1000);
    BlockSum sum = build_sum(a, b);
    ParamEnv env = env_for(state.range(0));
    for (auto _ : state) {
        DenseMatrix out = sum.evaluate(env);
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SumEvaluate)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_DenseAddOracle(benchmark::State& state) {
    BlockSpec a = two_by_two("a", "q", "r", "n", "m", 1);
    BlockSpec b = two_by_two("b", "s", "t", "n", "m", 1000);
    ParamEnv env = env_for(state.range(0));
    for (auto _ : state) {
        DenseMatrix out = dense_add(materialize_operand(a, env), materialize_operand(b, env));
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseAddOracle)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_ProductEvaluate(benchmark::State& state) {
    BlockSpec a = two_by_two("a", "q", "r", "n", "m", 1);
    BlockSpec b = two_by_two("b", "s", "t", "m", "p", 1000);
    BlockProduct prod = build_product(a, b);
    ParamEnv env = env_for(state.range(0));
    for (auto _ : state) {
        DenseMatrix out = prod.evaluate(env);
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductEvaluate)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_DenseMulOracle(benchmark::State& state) {
    BlockSpec a = two_by_two("a", "q", "r", "n", "m", 1);
    BlockSpec b = two_by_two("b", "s", "t", "m", "p", 1000);
    ParamEnv env = env_for(state.range(0));
    for (auto _ : state) {
        DenseMatrix out = dense_mul(materialize_operand(a, env), materialize_operand(b, env));
        benchmark::DoNotOptimize(out);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseMulOracle)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_IntervalConcatGrid(benchmark::State& state) {
    for (auto _ : state) {
        long long total = 0;
        for (long long a = 0; a <= 6; ++a)
            for (long long b = 0; b <= 6; ++b)
                for (long long c = 0; c <= 6; ++c) {
                    HybridInterval joined = concat(HybridInterval::closed_open(a, b),
                                                   HybridInterval::closed_open(b, c));
                    for (long long x = -1; x <= 8; ++x) total += joined.multiplicity(x);
                }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_IntervalConcatGrid);

void BM_FuzzRoundTrip(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Instance inst = random_instance(seed++, 6);
        DiffReport report = compare(oracle_instance(inst), eval_instance(inst));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_FuzzRoundTrip);

} // namespace

BENCHMARK_MAIN();
