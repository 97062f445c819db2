#include <benchmark/benchmark.h>

#include <vector>

#include "hyperres/artinian.hpp"
#include "hyperres/frobenius.hpp"
#include "hyperres/groebner.hpp"
#include "hyperres/parse.hpp"
#include "hyperres/resolution.hpp"

using namespace hyperres;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& r,
                                  const std::vector<const char*>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const char* t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

std::vector<Polynomial> fifth_powers_plus_cubic(const RingPtr& r) {
  return parse_all(r, {"x^5", "y^5", "z^5", "x^3+y^3+z^3"});
}

std::vector<Polynomial> quadrics(const RingPtr& r) {
  return parse_all(r, {"x^2", "x*z", "x*y+z^2", "y*z", "y^2"});
}

} // namespace

static void BM_GroebnerFifthPowers(benchmark::State& state) {
  auto r = make_ring(5, {"x", "y", "z"});
  auto gens = fifth_powers_plus_cubic(r);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_groebner(r, gens));
}
BENCHMARK(BM_GroebnerFifthPowers)->Unit(benchmark::kMillisecond);

static void BM_GroebnerQuadricsBracket4(benchmark::State& state) {
  auto r = make_ring(2, {"x", "y", "z"});
  auto gens = bracket_power(quadrics(r), 4);
  gens.push_back(parse_polynomial("x^3+x*y*z+z^3", r));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_groebner(r, gens));
}
BENCHMARK(BM_GroebnerQuadricsBracket4)->Unit(benchmark::kMillisecond);

static void BM_NormalFormDense(benchmark::State& state) {
  auto r = make_ring(5, {"x", "y", "z"});
  auto gb = ideal_groebner(r, fifth_powers_plus_cubic(r));
  auto s = parse_polynomial("x+2*y+3*z", r);
  auto dense = s;
  for (int i = 1; i < 12; ++i) dense = dense * s;
  for (auto _ : state) benchmark::DoNotOptimize(gb.normal_form(dense));
}
BENCHMARK(BM_NormalFormDense);

static void BM_ResolveSection0(benchmark::State& state) {
  auto r = make_ring(5, {"x", "y", "z"});
  auto f = parse_polynomial("x^3+y^3+z^3", r);
  auto powers = parse_all(r, {"x^5", "y^5", "z^5"});
  for (auto _ : state)
    benchmark::DoNotOptimize(resolve_over_R(r, f, powers, 3));
}
BENCHMARK(BM_ResolveSection0)->Unit(benchmark::kMillisecond);

static void BM_ResolveQuadricsOverP(benchmark::State& state) {
  auto r = make_ring(5, {"x", "y", "z"});
  auto gens = quadrics(r);
  for (auto _ : state) benchmark::DoNotOptimize(resolve_over_P(r, gens));
}
BENCHMARK(BM_ResolveQuadricsOverP)->Unit(benchmark::kMillisecond);

static void BM_SocleProfileBracket2(benchmark::State& state) {
  auto r = make_ring(2, {"x", "y", "z"});
  auto gens = bracket_power(quadrics(r), 2);
  gens.push_back(parse_polynomial("x^3+x*y*z+z^3", r));
  for (auto _ : state) benchmark::DoNotOptimize(socle_profile(r, gens));
}
BENCHMARK(BM_SocleProfileBracket2)->Unit(benchmark::kMillisecond);

static void BM_BracketPower32(benchmark::State& state) {
  auto r = make_ring(2, {"x", "y", "z"});
  auto gens = quadrics(r);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_power(gens, 32));
}
BENCHMARK(BM_BracketPower32);

BENCHMARK_MAIN();
