#include <benchmark/benchmark.h>

#include "farey/arith.hpp"
#include "farey/asympt.hpp"
#include "farey/lseries.hpp"
#include "farey/monoid.hpp"
#include "farey/spinchain.hpp"

namespace {

using farey::i64;

void BM_upsilon(benchmark::State& state) {
  const i64 x = state.range(0);
  const auto primes = farey::sieve_primes(farey::isqrt(x) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey::upsilon(x, primes));
  }
}
BENCHMARK(BM_upsilon)->Arg(1000000)->Arg(999999937)->Arg(1000000000000);

void BM_upsilon_cut(benchmark::State& state) {
  const i64 x = state.range(0);
  const auto primes = farey::sieve_primes(farey::isqrt(x) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey::upsilon_cut(x, primes));
  }
}
BENCHMARK(BM_upsilon_cut)->Arg(1000000)->Arg(1000000000000);

void BM_phi(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey::phi(n));
  }
}
BENCHMARK(BM_phi)->Arg(2000)->Arg(100000);

void BM_phi_divisor_sum(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey::phi_divisor_sum(n));
  }
}
BENCHMARK(BM_phi_divisor_sum)->Arg(2000);

void BM_phi_boca(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey::phi_boca(n));
  }
}
BENCHMARK(BM_phi_boca)->Arg(2000);

void BM_phi_oracle(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey::phi_oracle(n));
  }
}
BENCHMARK(BM_phi_oracle)->Arg(300);

void BM_psi_batch(benchmark::State& state) {
  const i64 n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey::psi_batch(n).back().psi);
  }
}
BENCHMARK(BM_psi_batch)->Arg(1000)->Arg(3000);

void BM_kronecker(benchmark::State& state) {
  for (auto _ : state) {
    i64 acc = 0;
    for (i64 d = -50; d <= 50; ++d) {
      for (i64 n = 1; n <= 50; ++n) acc += farey::kronecker(d, n);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_kronecker);

// Discriminant taken from a trace, so the argument is the trace n.
void BM_l_value(benchmark::State& state) {
  const i64 d = farey::fund_disc_decompose(state.range(0) *
                                           state.range(0) - 4).d;
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey::l_value(d, 1e-10));
  }
}
BENCHMARK(BM_l_value)->Arg(5)->Arg(101)->Arg(2001);

void BM_main_term(benchmark::State& state) {
  const i64 n = state.range(0);
  const i64 x = n * n - 4;
  const auto primes = farey::sieve_primes(farey::isqrt(x) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        farey::main_term(x, farey::default_c3, 1e-8, primes).residual);
  }
}
BENCHMARK(BM_main_term)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
