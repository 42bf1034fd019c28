#include <benchmark/benchmark.h>

#include "bigpoly/derivations.hpp"
#include "bigpoly/experiments.hpp"
#include "bigpoly/groebner.hpp"
#include "bigpoly/parse.hpp"
#include "bigpoly/resolution.hpp"
#include "bigpoly/strength.hpp"

namespace bigpoly {
namespace {

std::vector<Poly> random_forms(const Ring& r, std::size_t count, std::uint32_t degree, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Poly> out;
  while (out.size() < count) {
    Poly f = random_homogeneous(r, degree, rng);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

void BM_GroebnerCyclic4(benchmark::State& state) {
  const Ring r = Ring::standard(Field::prime(32003), 4);
  const std::vector<Poly> gens{
      parse_poly(r, "x1 + x2 + x3 + x4"),
      parse_poly(r, "x1*x2 + x2*x3 + x3*x4 + x4*x1"),
      parse_poly(r, "x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2"),
      parse_poly(r, "x1*x2*x3*x4 - 1"),
  };
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens, MonomialOrder::grevlex()));
}
BENCHMARK(BM_GroebnerCyclic4)->Unit(benchmark::kMillisecond);

void BM_GroebnerRandomQuadrics(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Ring r = Ring::standard(Field::prime(32003), n);
  const auto gens = random_forms(r, n, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens, MonomialOrder::grevlex()));
}
BENCHMARK(BM_GroebnerRandomQuadrics)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_GroebnerRationals(benchmark::State& state) {
  const Ring r = Ring::standard(Field::rationals(), 4);
  const auto gens = random_forms(r, 4, 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(gens, MonomialOrder::grevlex()));
}
BENCHMARK(BM_GroebnerRationals)->Unit(benchmark::kMillisecond);

void BM_Resolution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Ring r = Ring::standard(Field::prime(3), n);
  auto gens = random_forms(r, 3, 2, 13);
  gens[0] = gens[0] * parse_poly(r, "x1");
  gens[1] = gens[1] * parse_poly(r, "x1");
  const Ideal ideal(r, gens);
  for (auto _ : state) benchmark::DoNotOptimize(betti(ideal));
}
BENCHMARK(BM_Resolution)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_HasseSeries(benchmark::State& state) {
  const Ring r = Ring::standard(Field::prime(5), 3);
  Rng rng(17);
  const Poly f = random_homogeneous(r, static_cast<std::uint32_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hasse_series(f, 0, 10));
}
BENCHMARK(BM_HasseSeries)->Arg(4)->Arg(8)->Arg(12);

void BM_StrengthOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Ring r = Ring::standard(Field::prime(2), n);
  const auto count = *nonzero_form_count(r.field(), n, 3);
  for (auto _ : state) {
    for (std::uint64_t i = 0; i < 32; ++i) benchmark::DoNotOptimize(strength_exact_small(nonzero_form(r, 3, (i * 7919) % count)));
  }
}
BENCHMARK(BM_StrengthOracle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ThresholdSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(threshold_search({2, 2}, Field::prime(2), 3));
}
BENCHMARK(BM_ThresholdSearch)->Unit(benchmark::kMillisecond);

void BM_SmallSubalgebra(benchmark::State& state) {
  const Ring r = Ring::standard(Field::prime(3), 4);
  const std::vector<Poly> fs{parse_poly(r, "x1*x2 + x3*x4"), parse_poly(r, "x1*x3"), parse_poly(r, "x1*x4 + x2^2")};
  for (auto _ : state) benchmark::DoNotOptimize(small_subalgebra(fs));
}
BENCHMARK(BM_SmallSubalgebra)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bigpoly

BENCHMARK_MAIN();
