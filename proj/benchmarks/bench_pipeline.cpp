#include <benchmark/benchmark.h>

#include <memory>

#include "siflag/expr_io.hpp"
#include "siflag/ktheory.hpp"
#include "siflag/nil_daha.hpp"

using namespace siflag;

namespace {

std::shared_ptr<const RootSystem> group(int64_t n) {
  return std::make_shared<const RootSystem>(RootSystem::from_name("A" + std::to_string(n)));
}

void BM_RhoPrimeT0(benchmark::State& state) {
  auto rs = group(state.range(0));
  Expr e = parse_expr(*rs, "Tp[0]");
  for (auto _ : state) {
    MatrixRep R(rs);
    benchmark::DoNotOptimize(R.rho_prime(e));
  }
}
BENCHMARK(BM_RhoPrimeT0)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Rho0PrimeY(benchmark::State& state) {
  auto rs = group(state.range(0));
  Expr e = parse_expr(*rs, "Y[w1]");
  for (auto _ : state) {
    MatrixRep R(rs);
    benchmark::DoNotOptimize(R.rho0_prime(e));
  }
}
BENCHMARK(BM_Rho0PrimeY)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Rho0X(benchmark::State& state) {
  auto rs = group(state.range(0));
  Expr e = parse_expr(*rs, "X[w1]");
  for (auto _ : state) {
    NilDaha N(rs);
    benchmark::DoNotOptimize(N.rho0(e));
  }
}
BENCHMARK(BM_Rho0X)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_InversePieriChevalley(benchmark::State& state) {
  auto rs = group(state.range(0));
  Weight lambda = -rs->fundamental_weight(1);
  for (auto _ : state) {
    KTheory K(rs);
    benchmark::DoNotOptimize(K.inverse_pieri_chevalley(lambda, rs->ext_identity()));
  }
}
BENCHMARK(BM_InversePieriChevalley)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_QToda(benchmark::State& state) {
  auto rs = group(1);
  Expr e = parse_expr(*rs, "Y[w1] + Y[-w1]");
  for (auto _ : state) {
    NilDaha N(rs);
    benchmark::DoNotOptimize(N.qtoda(e));
  }
}
BENCHMARK(BM_QToda)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
