#include <benchmark/benchmark.h>

#include <random>

#include "qembed/learners/model.hpp"
#include "qembed/tabular/pca.hpp"

namespace {

struct Blobs {
  qembed::FeatureMatrix x;
  qembed::Labels y;
};

Blobs blobs(std::size_t n, std::size_t d) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> noise(0.0, 1.0);
  Blobs b{qembed::FeatureMatrix(n, d), qembed::Labels(n)};
  for (std::size_t r = 0; r < n; ++r) {
    b.y[r] = static_cast<int>(r % 2);
    for (std::size_t c = 0; c < d; ++c) b.x(r, c) = noise(gen) + (b.y[r] ? 0.75 : -0.75);
  }
  return b;
}

void BM_Fit(benchmark::State& state) {
  const auto kind = qembed::learners::all_kinds()[static_cast<std::size_t>(state.range(0))];
  const auto data = blobs(static_cast<std::size_t>(state.range(1)), 10);
  const qembed::learners::ModelSpec spec(kind, {}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qembed::learners::fit(spec, data.x, data.y));
  state.SetLabel(spec.name());
}

void FitArgs(benchmark::internal::Benchmark* b) {
  for (std::size_t k = 0; k < qembed::learners::all_kinds().size(); ++k) b->Args({static_cast<int64_t>(k), 1000});
  b->Unit(benchmark::kMillisecond);
}
BENCHMARK(BM_Fit)->Apply(FitArgs);

void BM_PcaFit(benchmark::State& state) {
  const auto data = blobs(3000, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qembed::tabular::pca_fit(data.x, data.x.cols()));
}
BENCHMARK(BM_PcaFit)->Arg(23)->Arg(42)->Unit(benchmark::kMillisecond);

}  // namespace
