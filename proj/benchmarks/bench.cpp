#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "mgcf/classifier.hpp"
#include "mgcf/counterfactual.hpp"
#include "mgcf/datagen.hpp"
#include "mgcf/dataset.hpp"
#include "mgcf/motif_mining.hpp"

namespace {

// splitmix64, so inputs are identical on every run and machine.
std::vector<double> random_series(std::size_t m, std::uint64_t seed) {
    std::uint64_t state = seed;
    std::vector<double> v(m);
    for (auto& x : v) {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        x = static_cast<double>(z >> 11) * 0x1.0p-53 * 10.0 - 5.0;
    }
    return v;
}

const mgcf::LabeledDataset& bird_like() {
    static const mgcf::LabeledDataset ds =
        mgcf::make_synthetic({"bench", 512, 20, 20, 0.0, 1.0, 17}, false);
    return ds;
}

void BM_SubseqDist(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const auto a = random_series(len, 1);
    const auto b = random_series(len, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mgcf::subseq_dist(a, b));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_SubseqDist)->Arg(16)->Arg(28)->Arg(64)->Arg(153)->Arg(358);

void BM_MinDistToSeries(benchmark::State& state) {
    const auto window = random_series(static_cast<std::size_t>(state.range(0)), 3);
    const mgcf::TimeSeries series{random_series(512, 4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mgcf::min_dist_to_series(window, series));
    }
}
BENCHMARK(BM_MinDistToSeries)->Arg(32)->Arg(153)->Arg(358);

void BM_DistanceProfile(benchmark::State& state) {
    const auto& ds = bird_like();
    const auto len = static_cast<std::size_t>(state.range(0));
    const mgcf::Candidate candidate{0, 7, len,
                                    ds.series(0).window(7, len)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mgcf::distance_profile(candidate, ds));
    }
}
BENCHMARK(BM_DistanceProfile)->Arg(153)->Arg(358);

void BM_InfoGain(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto distances = random_series(n, 5);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i % 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mgcf::info_gain(distances, labels));
    }
}
BENCHMARK(BM_InfoGain)->Arg(20)->Arg(100);

void BM_Mine(benchmark::State& state) {
    const mgcf::LabeledDataset ds = mgcf::make_planted_dataset(20, 40, 10, 12, 7);
    mgcf::MiningOptions opt;
    opt.early_abandon = state.range(0) != 0;
    opt.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mgcf::mine_motifs(ds, opt));
    }
}
BENCHMARK(BM_Mine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CfBatch(benchmark::State& state) {
    const auto& train = bird_like();
    const mgcf::LabeledDataset test =
        mgcf::make_synthetic({"bench", 512, 20, 20, 0.0, 1.0, 17}, true);
    const mgcf::OneNNClassifier clf = mgcf::train_1nn(train);
    const mgcf::MotifPair motifs = mgcf::mine_motifs(train);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            mgcf::generate_cf_batch(test.all_series(), clf, motifs, train));
    }
    state.SetItemsProcessed(
        static_cast<std::int64_t>(state.iterations() * test.size()));
}
BENCHMARK(BM_CfBatch)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
