#include <benchmark/benchmark.h>

#include <vector>

#include "skoszul/linalg.hpp"
#include "skoszul/parallel.hpp"
#include "skoszul/phi_koszul.hpp"
#include "skoszul/random.hpp"
#include "skoszul/skew.hpp"

using namespace skoszul;

namespace {

struct MatrixPair {
  SkewMatrix a, b;
};

MatrixPair matrices(std::size_t size) {
  Rng rng(7);
  const PolyRing r{Field::prime(3), 3};
  const Endo phi = Endo::frobenius(r, 3, 1);
  const RandomShape shape{3, 3, 2};
  return {random_matrix(phi, rng, size, size, shape), random_matrix(phi, rng, size, size, shape)};
}

std::vector<std::uint32_t> dense(std::size_t size) {
  Rng rng(8);
  std::vector<std::uint32_t> a(size * size);
  for (auto& x : a) x = static_cast<std::uint32_t>(rng.below(65521));
  return a;
}

struct Batch {
  PhiKoszulComplex complex;
  std::vector<SkewMatrix> cycles;
};

Batch boundaries(std::size_t count) {
  const PolyRing r{Field::prime(2), 3};
  auto c = build_phi_koszul(3, Endo::frobenius(r, 2, 1));
  Rng rng(9);
  std::vector<SkewMatrix> cycles;
  for (std::size_t k = 0; k < count; ++k)
    cycles.push_back(random_matrix(c.endo(), rng, 1, c.rank(3), RandomShape{3, 3, 2}) * c.differential(3));
  return {std::move(c), std::move(cycles)};
}

void BM_SmatMul(benchmark::State& state) {
  const auto m = matrices(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smat_mul(m.a, m.b));
}

void BM_SmatMulSerial(benchmark::State& state) {
  const auto m = matrices(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smat_mul_serial(m.a, m.b));
}

void BM_RrefModP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense(n);
  for (auto _ : state) {
    auto work = a;
    benchmark::DoNotOptimize(rref_mod_p(work, n, n, 65521));
  }
}

void BM_RrefModPSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense(n);
  for (auto _ : state) {
    auto work = a;
    benchmark::DoNotOptimize(rref_mod_p_serial(work, n, n, 65521));
  }
}

void BM_LiftCycles(benchmark::State& state) {
  const auto b = boundaries(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lift_cycles(b.complex, 2, b.cycles));
}

void BM_LiftCyclesSerial(benchmark::State& state) {
  const auto b = boundaries(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lift_cycles_serial(b.complex, 2, b.cycles));
}

}  // namespace

BENCHMARK(BM_SmatMul)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmatMulSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefModP)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefModPSerial)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftCycles)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LiftCyclesSerial)->Arg(32)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
