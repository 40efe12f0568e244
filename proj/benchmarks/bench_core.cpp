#include <benchmark/benchmark.h>

#include "cremona/cumulants.hpp"
#include "cremona/varieties.hpp"

using namespace cremona;

namespace {

Polynomial dense_poly(const RegistryPtr& reg, const std::vector<VarId>& vars, int deg) {
    Polynomial p = Polynomial::constant(reg, 1);
    for (auto v : vars) p = p * (Polynomial::variable(reg, v) + Polynomial::constant(reg, 1));
    Polynomial acc = p;
    for (int d = 1; d < deg; ++d) acc = acc * p;
    return acc;
}

void BM_poly_mul(benchmark::State& state) {
    auto reg = make_registry();
    std::vector<VarId> vars;
    for (int i = 0; i < 4; ++i) vars.push_back(reg->declare("x" + std::to_string(i)));
    Polynomial a = dense_poly(reg, vars, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
    state.SetLabel(std::to_string(a.terms().size()) + " terms each");
}
BENCHMARK(BM_poly_mul)->Arg(2)->Arg(4);

void BM_poly_gcd(benchmark::State& state) {
    auto reg = make_registry();
    VarId x = reg->declare("x"), y = reg->declare("y");
    Polynomial common = dense_poly(reg, {x, y}, 3);
    Polynomial a = common * (Polynomial::variable(reg, x) + Polynomial::constant(reg, 2));
    Polynomial b = common * (Polynomial::variable(reg, y) - Polynomial::constant(reg, 1));
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_poly_gcd);

void BM_binary_cumulant(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(binary_cumulant_map(n));
}
BENCHMARK(BM_binary_cumulant)->Arg(3)->Arg(5)->Arg(6);

void BM_interval_cumulant(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(l_cumulant_map(interval_partitions(n)));
}
BENCHMARK(BM_interval_cumulant)->Arg(4)->Arg(5);

void BM_verify_cremona_segre(benchmark::State& state) {
    CatalogEntry e = segre(2, 2);
    CremonaPair pair = linearizing_pair(e);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_cremona(pair.forward, pair.inverse));
}
BENCHMARK(BM_verify_cremona_segre);

void BM_g36_tangential_images(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(g36_tangential_images());
}
BENCHMARK(BM_g36_tangential_images);

void BM_secant_defect_grass26(benchmark::State& state) {
    CatalogEntry e = grass2(6);
    for (auto _ : state) benchmark::DoNotOptimize(secant_defect(e, 1));
}
BENCHMARK(BM_secant_defect_grass26);

}  // namespace
