#include <benchmark/benchmark.h>

#include "odla/odla.hpp"

namespace {

using odla::BianchiType;

void BM_Residual(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  odla::AlgebraSpec spec(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) spec.set_bracket(i, j, k, odla::make_scalar(long(i + 2 * j - k), long(k + 1)));
      spec.set_omega(i, j, odla::make_scalar(long(j - i), 3));
    }
  for (auto _ : state) benchmark::DoNotOptimize(odla::residual(spec));
}
BENCHMARK(BM_Residual)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_CongruenceDiagonalize(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  odla::Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      const odla::Scalar v = odla::make_scalar(long((i * 7 + j * 3) % 11) - 5, long(i + j + 1));
      m(i, j) = v;
      m(j, i) = v;
    }
  for (auto _ : state) benchmark::DoNotOptimize(odla::congruence_diagonalize(m));
}
BENCHMARK(BM_CongruenceDiagonalize)->Arg(3)->Arg(6)->Arg(10);

void BM_Classify(benchmark::State& state) {
  const auto type = static_cast<BianchiType>(state.range(0));
  const auto param = odla::takes_parameter(type) ? std::optional<odla::Scalar>(odla::make_scalar(3, 2)) : std::nullopt;
  const odla::AlgebraSpec spec = odla::orbit_sample(type, param, 42);
  state.SetLabel(std::string(odla::type_name(type)));
  for (auto _ : state) benchmark::DoNotOptimize(odla::classify(spec));
}
BENCHMARK(BM_Classify)
    ->Arg(static_cast<int>(BianchiType::IX))
    ->Arg(static_cast<int>(BianchiType::VI_n))
    ->Arg(static_cast<int>(BianchiType::VIII_na))
    ->Arg(static_cast<int>(BianchiType::IX_a));

void BM_SerializeParse(benchmark::State& state) {
  const odla::AlgebraSpec spec = odla::orbit_sample(BianchiType::VIII_xa, odla::make_scalar(1, 2), 7);
  for (auto _ : state) benchmark::DoNotOptimize(odla::parse(odla::serialize(spec)));
}
BENCHMARK(BM_SerializeParse);

}  // namespace
