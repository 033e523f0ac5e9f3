// Serial reference vs. OpenMP kernels on the 32 x 196 x 896 working shape.

#include <benchmark/benchmark.h>

#include "vidcom/frame_adjustment.hpp"
#include "vidcom/synthetic.hpp"
#include "vidcom/token_compression.hpp"

namespace {

const vidcom::TokenTensor& working_tensor() {
    static const auto tensor = vidcom::generate({{32, 196, 896}, vidcom::OutlierFrame{5, 0.05}, 7});
    return tensor;
}

void BM_SerialReference(benchmark::State& state) {
    const auto& x = working_tensor();
    const vidcom::RetentionConfig config;
    for (auto _ : state) benchmark::DoNotOptimize(vidcom::serial::compress(x, config));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(x.shape().token_count()));
}

void BM_Compress(benchmark::State& state) {
    const auto& x = working_tensor();
    const vidcom::RetentionConfig config;
    const vidcom::Execution exec{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(vidcom::compress(x, config, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(x.shape().token_count()));
}

void BM_StageOne(benchmark::State& state) {
    const auto& x = working_tensor();
    const vidcom::RetentionConfig config;
    const vidcom::Execution exec{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(vidcom::adjust_frames(x, config, exec));
}

}  // namespace

BENCHMARK(BM_SerialReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compress)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StageOne)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
