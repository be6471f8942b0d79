// Microbenchmarks for the hot paths: Hermite normal form, canonicalization,
// lattice enumeration, freeness decisions, and the enlargement fixpoint.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "latfree/intlat.hpp"
#include "latfree/lattice_search.hpp"
#include "latfree/maximality.hpp"
#include "latfree/maximalize.hpp"
#include "latfree/polyhedron.hpp"

namespace {

using namespace latfree;

Rational rat(long p, long q = 1) { return Rational(Int(p), Int(q)); }

IntMat random_int_matrix(std::mt19937_64& g, std::size_t n, long mag) {
  std::uniform_int_distribution<long> dist(-mag, mag);
  IntMat m(n, IntVec(n));
  for (auto& row : m)
    for (auto& e : row) e = Int(dist(g));
  return m;
}

/// Hexagon {|x| <= 3, |y| <= 3, |x - y| <= 3} plus redundant copies.
Polyhedron<Rational> redundant_hexagon() {
  std::vector<Inequality<Rational>> rows;
  auto push = [&](long a0, long a1, long b, long scale) {
    rows.push_back({{rat(a0 * scale), rat(a1 * scale)}, rat(b * scale)});
  };
  for (long s : {1L, 2L, 3L}) {
    push(1, 0, 3, s);
    push(-1, 0, 3, s);
    push(0, 1, 3, s);
    push(0, -1, 3, s);
    push(1, -1, 3, s);
    push(-1, 1, 3, s);
    push(1, 0, 5, s);  // redundant
    push(0, 1, 7, s);  // redundant
  }
  return Polyhedron<Rational>(2, rows);
}

Polyhedron<Rational> fractional_box2() {
  return Polyhedron<Rational>(2, {{{rat(1), rat(0)}, rat(3, 4)},
                                  {{rat(-1), rat(0)}, rat(-1, 4)},
                                  {{rat(0), rat(1)}, rat(3, 4)},
                                  {{rat(0), rat(-1)}, rat(-1, 4)}});
}

void bm_hnf(benchmark::State& state) {
  std::mt19937_64 g(1);
  std::vector<IntMat> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(random_int_matrix(g, static_cast<std::size_t>(state.range(0)), 9));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf(inputs[i]));
    i = (i + 1) % inputs.size();
  }
}
BENCHMARK(bm_hnf)->Arg(2)->Arg(4)->Arg(6);

void bm_canonicalize(benchmark::State& state) {
  Polyhedron<Rational> p = redundant_hexagon();
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(p));
}
BENCHMARK(bm_canonicalize);

void bm_enumerate(benchmark::State& state) {
  long r = state.range(0);
  Polyhedron<Rational> p(2, {{{rat(1), rat(0)}, rat(r)},
                             {{rat(-1), rat(0)}, rat(r)},
                             {{rat(0), rat(1)}, rat(r)},
                             {{rat(0), rat(-1)}, rat(r)},
                             {{rat(1), rat(1)}, rat(r)}});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice_points(p));
}
BENCHMARK(bm_enumerate)->Arg(3)->Arg(6)->Arg(10);

void bm_is_lattice_free(benchmark::State& state) {
  Polyhedron<Rational> p = fractional_box2();
  for (auto _ : state) benchmark::DoNotOptimize(is_lattice_free(p));
}
BENCHMARK(bm_is_lattice_free);

void bm_enlarge_to_maximal(benchmark::State& state) {
  Polyhedron<Rational> p = fractional_box2();
  for (auto _ : state) benchmark::DoNotOptimize(enlarge_to_maximal(p, 4));
}
BENCHMARK(bm_enlarge_to_maximal);

}  // namespace

BENCHMARK_MAIN();
