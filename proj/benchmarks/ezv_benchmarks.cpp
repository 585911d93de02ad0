#include <benchmark/benchmark.h>

#include "ezv/divisor_series.hpp"
#include "ezv/elliptic_gamma.hpp"
#include "ezv/elliptic_zeta.hpp"

namespace {

using ezv::cplx;

void BM_ZkQSeries(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const ezv::WedgePair pair = ezv::standard_pair();
  for (auto _ : state) benchmark::DoNotOptimize(ezv::z_k(k, pair));
}
BENCHMARK(BM_ZkQSeries)->DenseRange(1, 8);

void BM_ZkOddSplit(benchmark::State& state) {
  const ezv::WedgePair pair = ezv::standard_pair();
  for (auto _ : state) benchmark::DoNotOptimize(ezv::z_k_odd_split(5, pair));
}
BENCHMARK(BM_ZkOddSplit);

void BM_ZkLattice(benchmark::State& state) {
  ezv::PrecisionPolicy prec;
  prec.lattice_radius = static_cast<int>(state.range(0));
  const ezv::WedgePair pair = ezv::standard_pair();
  for (auto _ : state) benchmark::DoNotOptimize(ezv::z_k_lattice(5, pair, prec));
}
BENCHMARK(BM_ZkLattice)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_DkLambert(benchmark::State& state) {
  const ezv::NomePoint q(cplx(0.0, 0.9));
  for (auto _ : state) benchmark::DoNotOptimize(ezv::d_k(4, q, {}, ezv::DkStrategy::lambert));
}
BENCHMARK(BM_DkLambert);

void BM_DkSigmaCoefficients(benchmark::State& state) {
  const ezv::NomePoint q(cplx(0.0, 0.9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ezv::d_k(4, q, {}, ezv::DkStrategy::sigma_coefficients));
  }
}
BENCHMARK(BM_DkSigmaCoefficients);

void BM_EllGamma(benchmark::State& state) {
  const ezv::GammaArg arg{cplx(0.3, 0.2), ezv::UpperHalfPoint(cplx(0.2, 1.0)),
                          ezv::UpperHalfPoint(cplx(0.1, 0.8))};
  for (auto _ : state) benchmark::DoNotOptimize(ezv::ell_gamma(arg));
}
BENCHMARK(BM_EllGamma);

void BM_EisensteinLattice(benchmark::State& state) {
  ezv::PrecisionPolicy prec;
  prec.lattice_radius = static_cast<int>(state.range(0));
  const ezv::UpperHalfPoint tau(cplx(0.0, 1.5));
  for (auto _ : state) benchmark::DoNotOptimize(ezv::eisenstein_lattice(4, tau, prec));
}
BENCHMARK(BM_EisensteinLattice)->Arg(50)->Arg(100)->Arg(200);

void BM_GkQExpansion(benchmark::State& state) {
  const ezv::UpperHalfPoint tau(cplx(0.0, 1.5));
  for (auto _ : state) benchmark::DoNotOptimize(ezv::gk_qexp(4, tau));
}
BENCHMARK(BM_GkQExpansion);

}  // namespace

BENCHMARK_MAIN();
