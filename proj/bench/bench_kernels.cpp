#include <benchmark/benchmark.h>

#include <vector>

#include "invforge/constructors.hpp"
#include "invforge/field.hpp"
#include "invforge/kernels.hpp"

using namespace invforge;

namespace {

struct Fixture {
    FieldRef field;
    DlogTable table;
    SparsePoly poly;
};

Fixture make_fixture(std::uint64_t q) {
    auto field = make_field(q);
    const auto g = find_smallest_generator(*field);
    auto table = dlog_table(g);
    auto poly = construct_h1(field, 4);
    return {field, std::move(table), std::move(poly)};
}

void BM_Serial(benchmark::State& state) {
    const auto fx = make_fixture(static_cast<std::uint64_t>(state.range(0)));
    std::vector<std::uint32_t> out(fx.field->order());
    for (auto _ : state) {
        kernels::evaluate_all_serial(fx.poly, fx.table, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

void BM_Parallel(benchmark::State& state) {
    const auto fx = make_fixture(static_cast<std::uint64_t>(state.range(0)));
    std::vector<std::uint32_t> out(fx.field->order());
    for (auto _ : state) {
        kernels::evaluate_all_parallel(fx.poly, fx.table, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

void BM_SquareMultiply(benchmark::State& state) {
    const auto fx = make_fixture(static_cast<std::uint64_t>(state.range(0)));
    std::vector<std::uint32_t> out(fx.field->order());
    for (auto _ : state) {
        kernels::evaluate_all_pow(fx.poly, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

// primes with q = 1 mod 4, so d = 4 divides q-1
BENCHMARK(BM_Serial)->Arg(1009)->Arg(65537)->Arg(1000033);
BENCHMARK(BM_Parallel)->Arg(1009)->Arg(65537)->Arg(1000033);
BENCHMARK(BM_SquareMultiply)->Arg(1009)->Arg(65537)->Arg(1000033);

}  // namespace

BENCHMARK_MAIN();
