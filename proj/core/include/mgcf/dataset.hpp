#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mgcf {

// A fixed-length univariate sequence of finite real samples.
struct TimeSeries {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    std::span<const double> span() const { return values; }

    // Window [start, start + len), unchecked.
    std::span<const double> window(std::size_t start, std::size_t len) const {
        return std::span<const double>(values).subspan(start, len);
    }

    bool operator==(const TimeSeries&) const = default;
};

// Equal-length series with binary labels. Immutable after construction;
// safe to share across threads.
//
// Construction enforces: n >= 2, one label in {0,1} per series, all series
// the same length >= 1, all values finite, both classes present.
class LabeledDataset {
public:
    LabeledDataset(std::vector<TimeSeries> series, std::vector<int> labels,
                   std::string name);

    std::size_t size() const { return series_.size(); }   // n
    std::size_t length() const { return length_; }         // m
    const TimeSeries& series(std::size_t i) const { return series_[i]; }
    const std::vector<TimeSeries>& all_series() const { return series_; }
    int label(std::size_t i) const { return labels_[i]; }
    const std::vector<int>& labels() const { return labels_; }
    const std::string& name() const { return name_; }

    // Indices i with label(i) == class_id, ascending. class_id must be 0 or 1.
    std::vector<std::size_t> class_indices(int class_id) const;

    // Number of series carrying class_id.
    std::size_t class_count(int class_id) const;

private:
    std::vector<TimeSeries> series_;
    std::vector<int> labels_;
    std::string name_;
    std::size_t length_ = 0;
};

// Mapping from a file's raw label value to a class id in {0,1}.
using LabelMap = std::map<double, int>;

// Parse a UCR-style text file: one series per row, first token the raw
// label, then m values, tab- or whitespace-separated. Raw labels are mapped
// through label_map when given, otherwise by ascending order of the two
// distinct raw labels. The dataset name is the file stem minus a trailing
// "_TRAIN"/"_TEST".
//
// Throws FormatError for a missing file, ragged rows (naming the line),
// unparseable tokens (naming the line), non-finite values, or more than two
// distinct raw labels.
LabeledDataset load_ucr(const std::filesystem::path& path,
                        const std::optional<LabelMap>& label_map = std::nullopt);

// Write in the same row format, labels as 0/1, values in shortest
// round-trip decimal form so a reload reproduces every bit.
void write_ucr(const LabeledDataset& ds, const std::filesystem::path& path);

// JSON dump {name, n, m, labels, series} for tooling.
std::string dataset_to_json(const LabeledDataset& ds);

} // namespace mgcf
