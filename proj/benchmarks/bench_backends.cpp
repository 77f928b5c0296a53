// Backend timings on a fixed 61-bit prime ring, plus one integer-growth run.
// Indices are 2^e + 12345 so the ladders see a mixed bit pattern.

#include <benchmark/benchmark.h>
#include <linrec/linrec.hpp>

#include <cstdint>
#include <vector>

using namespace linrec;

namespace {

const Ring& mod_ring() {
  static const Ring r = Ring::modulo(Elem("2305843009213693951"));
  return r;
}

RecurrenceSpec ones_spec(std::size_t n, const Ring& ring) {
  return basis_spec(std::vector<Elem>(n, Elem(1)), ring);
}

mpz_class bench_index(std::int64_t e) {
  return (mpz_class(1) << static_cast<unsigned long>(e)) + 12345;
}

void BM_dedicated(benchmark::State& state) {
  const Ring& ring = mod_ring();
  auto n = static_cast<std::size_t>(state.range(0));
  mpz_class N = bench_index(state.range(1));
  for (auto _ : state) {
    switch (n) {
      case 2: {
        UPair r = lucas_u_pair({1, -1}, N, ring);
        benchmark::DoNotOptimize(r);
        break;
      }
      case 3: {
        auto r = order3_window({1, 1, 1}, N, ring);
        benchmark::DoNotOptimize(r);
        break;
      }
      case 4: {
        auto r = order4_window({1, 1, 1, 1}, N, ring);
        benchmark::DoNotOptimize(r);
        break;
      }
    }
  }
}
BENCHMARK(BM_dedicated)
    ->Args({2, 20})->Args({2, 40})->Args({2, 60})
    ->Args({3, 20})->Args({3, 40})->Args({3, 60})
    ->Args({4, 20})->Args({4, 40})->Args({4, 60});

void BM_general(benchmark::State& state) {
  const Ring& ring = mod_ring();
  auto n = static_cast<std::size_t>(state.range(0));
  RecurrenceSpec spec = ones_spec(n, ring);
  mpz_class N = bench_index(state.range(1));
  for (auto _ : state) {
    Window w = basis_window(spec, N, ring);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_general)
    ->Args({2, 40})->Args({3, 40})->Args({4, 40})
    ->Args({5, 40})->Args({6, 40})->Args({8, 40})
    ->Args({5, 20})->Args({5, 60});

void BM_fiduccia(benchmark::State& state) {
  const Ring& ring = mod_ring();
  auto n = static_cast<std::size_t>(state.range(0));
  RecurrenceSpec spec = ones_spec(n, ring);
  mpz_class N = bench_index(state.range(1));
  for (auto _ : state) {
    Elem r = fiduccia_term(spec, N, ring);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_fiduccia)
    ->Args({2, 40})->Args({3, 40})->Args({4, 40})
    ->Args({5, 40})->Args({6, 40})->Args({8, 40})
    ->Args({5, 20})->Args({5, 60});

void BM_uv_chain(benchmark::State& state) {
  const Ring& ring = mod_ring();
  mpz_class N = bench_index(state.range(0));
  for (auto _ : state) {
    auto r = lucas_uv_chain({1, -1}, N, ring);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_uv_chain)->Arg(20)->Arg(40)->Arg(60);

void BM_iterative(benchmark::State& state) {
  const Ring& ring = mod_ring();
  auto n = static_cast<std::size_t>(state.range(0));
  RecurrenceSpec spec = ones_spec(n, ring);
  std::uint64_t N = 1ul << static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto r = iterate_slice(spec, N, 1, ring);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_iterative)
    ->Args({2, 10})->Args({2, 14})->Args({2, 18})
    ->Args({5, 14});

void BM_integer_growth(benchmark::State& state) {
  Ring z = Ring::integers();
  std::uint64_t N = 1ul << static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    UPair r = lucas_u_pair({1, -1}, N, z);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_integer_growth)->Arg(10)->Arg(14)->Arg(18)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
