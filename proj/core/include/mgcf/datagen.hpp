#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mgcf/dataset.hpp"

namespace mgcf {

// Deterministic synthetic fixtures in UCR text format. Generation uses only
// integer mixing and basic arithmetic (no libm, no std::<random>), so the
// emitted bytes are identical on every platform.

// Geometry and raw-label convention for one generated dataset.
struct SynthSpec {
    std::string name;
    std::size_t length = 0;    // m
    std::size_t n_train = 0;
    std::size_t n_test = 0;
    double raw_label0 = 0.0;   // written for class 0 rows
    double raw_label1 = 1.0;   // written for class 1 rows
    std::uint64_t seed = 1;
};

// Stand-ins with the exact (length, train size, test size) and raw-label
// conventions of five UCR archive problems: ECG200, Coffee, GunPoint,
// BeetleFly, BirdChicken.
const std::vector<SynthSpec>& ucr_standin_specs();

// Series for one partition of a spec: localized class-dependent bumps over
// background noise, unique per (spec.seed, partition, row).
LabeledDataset make_synthetic(const SynthSpec& spec, bool test_partition);

// Write <dir>/<name>_TRAIN.tsv and <dir>/<name>_TEST.tsv with raw labels.
// Returns the two paths.
std::pair<std::filesystem::path, std::filesystem::path>
write_synthetic_ucr(const SynthSpec& spec, const std::filesystem::path& dir);

// Dataset whose class-1 rows carry one exact shared pattern at
// [planted_start, planted_start + planted_len) over small noise, and whose
// class-0 rows are small noise everywhere: the planted window separates the
// classes perfectly, so its information gain is exactly 1 for balanced
// labels. Labels alternate 0,1,0,1,...
LabeledDataset make_planted_dataset(std::size_t n, std::size_t m,
                                    std::size_t planted_start,
                                    std::size_t planted_len,
                                    std::uint64_t seed,
                                    const std::string& name = "planted");

} // namespace mgcf
