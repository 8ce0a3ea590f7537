#include "mgcf/datagen.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "mgcf/error.hpp"

namespace mgcf {

namespace {

// splitmix64. Integer mixing only, so the stream (and everything derived
// from it) is identical on every platform.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 mantissa bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t derive(std::uint64_t a, std::uint64_t b) {
    Rng r(a ^ (b * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull));
    return r.next();
}

// Snap to 3 decimals. Only the planted noise floor uses this; the class
// specimens must stay continuous, because grid-valued data lets a donor
// value coincide with the query value it replaces, splitting an otherwise
// contiguous perturbation into two changed runs.
double quantize3(double v) {
    const double scaled = v * 1000.0;
    const double shifted = scaled + (scaled >= 0.0 ? 0.5 : -0.5);
    return static_cast<double>(static_cast<long long>(shifted)) / 1000.0;
}

void append_value(std::string& line, double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        throw InternalError("datagen: number formatting failed");
    }
    line.append(buf, ptr);
}

} // namespace

const std::vector<SynthSpec>& ucr_standin_specs() {
    static const std::vector<SynthSpec> specs = {
        {"ECG200", 96, 100, 100, -1.0, 1.0, 1},
        {"Coffee", 286, 28, 28, 0.0, 1.0, 2},
        {"GunPoint", 150, 50, 150, 1.0, 2.0, 3},
        {"BeetleFly", 470, 20, 20, 1.0, 2.0, 4},
        {"BirdChicken", 512, 20, 20, 1.0, 2.0, 5},
    };
    return specs;
}

LabeledDataset make_synthetic(const SynthSpec& spec, bool test_partition) {
    const std::size_t n = test_partition ? spec.n_test : spec.n_train;
    const std::size_t m = spec.length;
    if (n < 2) {
        throw std::invalid_argument("make_synthetic: partition needs at least 2 series");
    }
    if (m < 8) {
        throw std::invalid_argument("make_synthetic: series length must be at least 8");
    }

    // One opposite-sign triangular bump per class, early in the series so a
    // 0.3-fraction window can cover it whole, over uniform +-0.5 noise.
    const std::size_t halfwidth = std::max<std::size_t>(2, m / 10);
    const std::size_t center = std::max(halfwidth, m / 5);
    const std::uint64_t partition_salt = test_partition ? 11 : 7;

    std::vector<TimeSeries> series;
    std::vector<int> labels;
    series.reserve(n);
    labels.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const int label = static_cast<int>(k % 2);
        Rng rng(derive(derive(spec.seed, partition_salt), k));
        const double amplitude = 4.0 * (0.9 + 0.2 * rng.unit());
        const double sign = label == 0 ? 1.0 : -1.0;

        TimeSeries ts;
        ts.values.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            ts.values[j] = rng.unit() - 0.5;
        }
        for (std::size_t j = center - halfwidth; j <= center + halfwidth; ++j) {
            const double offset = j >= center
                                      ? static_cast<double>(j - center)
                                      : static_cast<double>(center - j);
            const double t = 1.0 - offset / static_cast<double>(halfwidth);
            ts.values[j] += sign * amplitude * t;
        }

        series.push_back(std::move(ts));
        labels.push_back(label);
    }
    return LabeledDataset(std::move(series), std::move(labels), spec.name);
}

std::pair<std::filesystem::path, std::filesystem::path>
write_synthetic_ucr(const SynthSpec& spec, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::pair<std::filesystem::path, std::filesystem::path> paths = {
        dir / (spec.name + "_TRAIN.tsv"), dir / (spec.name + "_TEST.tsv")};

    for (bool test_partition : {false, true}) {
        const LabeledDataset ds = make_synthetic(spec, test_partition);
        const auto& path = test_partition ? paths.second : paths.first;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw FormatError("cannot open for writing: " + path.string());
        }
        std::string line;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            line.clear();
            append_value(line, ds.label(i) == 0 ? spec.raw_label0 : spec.raw_label1);
            for (double v : ds.series(i).values) {
                line.push_back('\t');
                append_value(line, v);
            }
            line.push_back('\n');
            out << line;
        }
        if (!out) {
            throw FormatError("write failed: " + path.string());
        }
    }
    return paths;
}

LabeledDataset make_planted_dataset(std::size_t n, std::size_t m,
                                    std::size_t planted_start,
                                    std::size_t planted_len,
                                    std::uint64_t seed,
                                    const std::string& name) {
    if (n < 2) {
        throw std::invalid_argument("make_planted_dataset: need at least 2 series");
    }
    if (m < 4) {
        throw std::invalid_argument("make_planted_dataset: series length must be at least 4");
    }
    if (planted_len == 0 || planted_start + planted_len > m) {
        throw std::invalid_argument("make_planted_dataset: planted span out of range");
    }

    // Class-1 series all carry the identical alternating +-6 pattern over
    // the planted span; everything else is +-0.1 noise. Any window touching
    // the pattern separates the classes perfectly.
    std::vector<TimeSeries> series;
    std::vector<int> labels;
    series.reserve(n);
    labels.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const int label = static_cast<int>(k % 2);
        Rng rng(derive(derive(seed, 3), k));

        TimeSeries ts;
        ts.values.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            ts.values[j] = quantize3(0.2 * (rng.unit() - 0.5));
        }
        if (label == 1) {
            for (std::size_t j = 0; j < planted_len; ++j) {
                ts.values[planted_start + j] = (j % 2 == 0 ? 6.0 : -6.0);
            }
        }
        series.push_back(std::move(ts));
        labels.push_back(label);
    }
    return LabeledDataset(std::move(series), std::move(labels), name);
}

} // namespace mgcf
