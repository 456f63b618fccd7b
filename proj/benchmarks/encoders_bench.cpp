#include <benchmark/benchmark.h>

#include <random>

#include "qembed/encoders/displacement.hpp"
#include "qembed/encoders/encoder.hpp"
#include "qembed/encoders/iqp.hpp"
#include "qembed/encoders/squeezing.hpp"

namespace {

using namespace qembed::encoders;

void BM_DisplaceClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(displace_vacuum({0.8}, 30));
}
BENCHMARK(BM_DisplaceClosedForm);

void BM_DisplaceExpm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(displace_vacuum_expm({0.8}, 30));
}
BENCHMARK(BM_DisplaceExpm);

void BM_SqueezeExpm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(squeeze_vacuum({0.8}, 60));
}
BENCHMARK(BM_SqueezeExpm);

void BM_SqueezeBasisState(benchmark::State& state) {
  const SqueezedVacuumBasis basis(60);
  for (auto _ : state) benchmark::DoNotOptimize(basis.state({0.8}));
}
BENCHMARK(BM_SqueezeBasisState);

void BM_SqueezeBasisBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(SqueezedVacuumBasis(60));
}
BENCHMARK(BM_SqueezeBasisBuild);

void BM_IqpEncode(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(qubits);
  for (std::size_t i = 0; i < qubits; ++i) x[i] = 0.1 * static_cast<double>(i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(iqp_encode(x, qubits));
}
BENCHMARK(BM_IqpEncode)->Arg(2)->Arg(6)->Arg(10);

void BM_EncodeMatrix(benchmark::State& state) {
  const auto method = static_cast<EncodingMethod>(state.range(0));
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  qembed::FeatureMatrix x(500, 10);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) = u(gen);
  const auto cfg = EncoderConfig::defaults(method);
  for (auto _ : state) benchmark::DoNotOptimize(encode_matrix(x, cfg, 1));
  state.SetLabel(std::string(method_name(method)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(x.rows()));
}
BENCHMARK(BM_EncodeMatrix)
    ->Arg(static_cast<int>(EncodingMethod::Iqp))
    ->Arg(static_cast<int>(EncodingMethod::Displacement))
    ->Arg(static_cast<int>(EncodingMethod::Squeezing))
    ->Unit(benchmark::kMillisecond);

}  // namespace
