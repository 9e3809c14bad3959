#include <benchmark/benchmark.h>

#include <random>

#include "fqtype/bipoly.hpp"
#include "fqtype/criteria.hpp"
#include "fqtype/stats.hpp"
#include "fqtype/text.hpp"

using namespace fqtype;

namespace {

UniPoly random_monic(const FieldPtr& F, int d, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
  for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % F->q())};
  c.back() = F->one();
  return UniPoly(F, c);
}

void BM_Factorize(benchmark::State& state) {
  const FieldPtr F = parse_field("2^8");
  std::mt19937_64 rng(1);
  const int d = static_cast<int>(state.range(0));
  std::vector<UniPoly> corpus;
  for (int i = 0; i < 64; ++i) corpus.push_back(random_monic(F, d, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(corpus[i++ % corpus.size()]));
}
BENCHMARK(BM_Factorize)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_FactorizationTypeLargeField(benchmark::State& state) {
  const FieldPtr F = parse_field("2^20");
  std::mt19937_64 rng(2);
  std::vector<UniPoly> corpus;
  for (int i = 0; i < 64; ++i) corpus.push_back(random_monic(F, 12, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorization_type(corpus[i++ % corpus.size()]));
}
BENCHMARK(BM_FactorizationTypeLargeField);

void BM_IntervalSweep(benchmark::State& state) {
  const FieldPtr F = parse_field("2^" + std::to_string(state.range(0)));
  const UniPoly f = parse_unipoly(F, "T^12+T^3");
  for (auto _ : state)
    benchmark::DoNotOptimize(interval_distribution(f, 0, Elem{1}, SweepMode::exhaustive()));
  state.SetItemsProcessed(state.iterations() * F->q());
}
BENCHMARK(BM_IntervalSweep)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BivariateGcd(benchmark::State& state) {
  const FieldPtr F = parse_field("3^2");
  std::mt19937_64 rng(3);
  const UniPoly f = random_monic(F, static_cast<int>(state.range(0)), rng);
  const UniPoly fp = derivative(f);
  const BiPoly a = tilde(f) - BiPoly::in_x(fp), b = tilde(fp);
  for (auto _ : state) benchmark::DoNotOptimize(bipoly_gcd(a, b));
}
BENCHMARK(BM_BivariateGcd)->Arg(6)->Arg(10)->Arg(14);

void BM_BivariateFactorize(benchmark::State& state) {
  const FieldPtr F = parse_field("5");
  const BiPoly P = parse_bipoly(F, "(x^3+y^2*x+2*y+1)*(x^2+3*x*y+y^3+4)*(x+y+1)^2");
  for (auto _ : state) benchmark::DoNotOptimize(bivariate_factorize(P));
}
BENCHMARK(BM_BivariateFactorize)->Unit(benchmark::kMillisecond);

void BM_GeometricIrreducibility(benchmark::State& state) {
  const FieldPtr F = parse_field("2");
  const BiPoly P = tilde(parse_unipoly(F, "T^7+T^5+T^3"));
  for (auto _ : state) benchmark::DoNotOptimize(geometrically_irreducible(P));
}
BENCHMARK(BM_GeometricIrreducibility)->Unit(benchmark::kMillisecond);

void BM_BadSets(benchmark::State& state) {
  const FieldPtr F = parse_field("2");
  const UniPoly f = parse_unipoly(F, "T^12+T^3");
  for (auto _ : state) benchmark::DoNotOptimize(bad_sets(f));
}
BENCHMARK(BM_BadSets)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
