#include "mgcf/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mgcf/error.hpp"

namespace mgcf {

namespace {

double parse_token(std::string_view tok, std::size_t line_no, const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw FormatError("line " + std::to_string(line_no) + ": cannot parse " +
                          what + " '" + std::string(tok) + "'");
    }
    if (!std::isfinite(v)) {
        throw FormatError("line " + std::to_string(line_no) + ": non-finite " +
                          what + " '" + std::string(tok) + "'");
    }
    return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::string name_from_path(const std::filesystem::path& path) {
    std::string stem = path.stem().string();
    for (const char* suffix : {"_TRAIN", "_TEST"}) {
        std::string s(suffix);
        if (stem.size() > s.size() && stem.ends_with(s)) {
            return stem.substr(0, stem.size() - s.size());
        }
    }
    return stem;
}

} // namespace

LabeledDataset::LabeledDataset(std::vector<TimeSeries> series,
                               std::vector<int> labels, std::string name)
    : series_(std::move(series)), labels_(std::move(labels)), name_(std::move(name)) {
    if (series_.size() != labels_.size()) {
        throw FormatError("dataset '" + name_ + "': " + std::to_string(series_.size()) +
                          " series but " + std::to_string(labels_.size()) + " labels");
    }
    if (series_.size() < 2) {
        throw FormatError("dataset '" + name_ + "': needs at least 2 series, got " +
                          std::to_string(series_.size()));
    }
    length_ = series_.front().size();
    if (length_ == 0) {
        throw FormatError("dataset '" + name_ + "': series are empty");
    }
    bool seen[2] = {false, false};
    for (std::size_t i = 0; i < series_.size(); ++i) {
        if (series_[i].size() != length_) {
            throw FormatError("dataset '" + name_ + "': series " + std::to_string(i) +
                              " has length " + std::to_string(series_[i].size()) +
                              ", expected " + std::to_string(length_));
        }
        for (double v : series_[i].values) {
            if (!std::isfinite(v)) {
                throw FormatError("dataset '" + name_ + "': series " +
                                  std::to_string(i) + " contains a non-finite value");
            }
        }
        int c = labels_[i];
        if (c != 0 && c != 1) {
            throw FormatError("dataset '" + name_ + "': label " + std::to_string(c) +
                              " at index " + std::to_string(i) + " is not in {0,1}");
        }
        seen[c] = true;
    }
    if (!seen[0] || !seen[1]) {
        throw FormatError("dataset '" + name_ + "': both classes must be present");
    }
}

std::vector<std::size_t> LabeledDataset::class_indices(int class_id) const {
    if (class_id != 0 && class_id != 1) {
        throw std::invalid_argument("class_indices: class id must be 0 or 1, got " +
                                    std::to_string(class_id));
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == class_id) out.push_back(i);
    }
    return out;
}

std::size_t LabeledDataset::class_count(int class_id) const {
    return class_indices(class_id).size();
}

LabeledDataset load_ucr(const std::filesystem::path& path,
                        const std::optional<LabelMap>& label_map) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open dataset file: " + path.string());
    }

    std::vector<TimeSeries> series;
    std::vector<double> raw_labels;
    std::set<double> distinct;
    std::size_t arity = 0;  // fields per row, fixed by the first row

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_fields(line);
        if (fields.empty()) continue;  // blank line

        if (arity == 0) {
            arity = fields.size();
            if (arity < 2) {
                throw FormatError("line " + std::to_string(line_no) +
                                  ": a row needs a label and at least one value");
            }
        } else if (fields.size() != arity) {
            throw FormatError("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(arity) + " fields, got " +
                              std::to_string(fields.size()));
        }

        raw_labels.push_back(parse_token(fields[0], line_no, "label"));
        distinct.insert(raw_labels.back());

        TimeSeries ts;
        ts.values.reserve(arity - 1);
        for (std::size_t j = 1; j < fields.size(); ++j) {
            ts.values.push_back(parse_token(fields[j], line_no, "value"));
        }
        series.push_back(std::move(ts));
    }

    if (series.empty()) {
        throw FormatError("dataset file is empty: " + path.string());
    }
    if (distinct.size() > 2) {
        std::ostringstream os;
        os << "unsupported label cardinality: found " << distinct.size()
           << " distinct raw labels in " << path.string();
        throw FormatError(os.str());
    }

    LabelMap map;
    if (label_map) {
        map = *label_map;
        for (const auto& [raw, mapped] : map) {
            if (mapped != 0 && mapped != 1) {
                throw FormatError("label map must target {0,1}");
            }
        }
    } else {
        int next = 0;
        for (double raw : distinct) map[raw] = next++;  // ascending raw -> 0,1
    }

    std::vector<int> labels;
    labels.reserve(raw_labels.size());
    for (double raw : raw_labels) {
        auto it = map.find(raw);
        if (it == map.end()) {
            std::ostringstream os;
            os << "raw label " << raw << " missing from label map";
            throw FormatError(os.str());
        }
        labels.push_back(it->second);
    }

    return LabeledDataset(std::move(series), std::move(labels), name_from_path(path));
}

void write_ucr(const LabeledDataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("cannot open for writing: " + path.string());
    }
    char buf[64];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        out << ds.label(i);
        for (double v : ds.series(i).values) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
            out << '\t' << std::string_view(buf, ptr - buf);
            (void)ec;
        }
        out << '\n';
    }
    if (!out) {
        throw FormatError("write failed: " + path.string());
    }
}

std::string dataset_to_json(const LabeledDataset& ds) {
    nlohmann::json j;
    j["name"] = ds.name();
    j["n"] = ds.size();
    j["m"] = ds.length();
    j["labels"] = ds.labels();
    auto& arr = j["series"] = nlohmann::json::array();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        arr.push_back(ds.series(i).values);
    }
    return j.dump(2) + "\n";
}

} // namespace mgcf
