#include "mgcf/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mgcf/error.hpp"

namespace mgcf {

namespace {

using nlohmann::json;

json motif_to_obj(const MotifDescriptor& m) {
    json j;
    j["class_id"] = m.class_id;
    j["source_series"] = m.source_series;
    j["start_idx"] = m.start_idx;
    j["end_idx"] = m.end_idx;
    j["quality"] = m.quality;
    j["values"] = m.values;
    return j;
}

MotifDescriptor motif_from_obj(const json& j) {
    MotifDescriptor m;
    m.class_id = j.at("class_id").get<int>();
    m.source_series = j.at("source_series").get<std::size_t>();
    m.start_idx = j.at("start_idx").get<std::size_t>();
    m.end_idx = j.at("end_idx").get<std::size_t>();
    m.quality = j.at("quality").get<double>();
    m.values = j.at("values").get<std::vector<double>>();
    if (m.class_id != 0 && m.class_id != 1) {
        throw FormatError("motif class_id must be 0 or 1, got " +
                          std::to_string(m.class_id));
    }
    if (m.end_idx <= m.start_idx || m.values.size() != m.end_idx - m.start_idx) {
        throw FormatError("motif span and value count disagree");
    }
    return m;
}

json cf_to_obj(const Counterfactual& cf, std::size_t query_index) {
    json j;
    j["query_index"] = query_index;
    j["original"] = cf.original.values;
    j["perturbed"] = cf.perturbed.values;
    j["replaced_span"] = {cf.span_start, cf.span_end};
    j["original_pred"] = cf.original_pred;
    j["target"] = cf.target;
    j["achieved_pred"] = cf.achieved_pred;
    j["valid"] = cf.valid;
    return j;
}

Counterfactual cf_from_obj(const json& j) {
    Counterfactual cf;
    cf.original.values = j.at("original").get<std::vector<double>>();
    cf.perturbed.values = j.at("perturbed").get<std::vector<double>>();
    const auto& span = j.at("replaced_span");
    if (!span.is_array() || span.size() != 2) {
        throw FormatError("replaced_span must be a two-element array");
    }
    cf.span_start = span[0].get<std::size_t>();
    cf.span_end = span[1].get<std::size_t>();
    cf.original_pred = j.at("original_pred").get<int>();
    cf.target = j.at("target").get<int>();
    cf.achieved_pred = j.at("achieved_pred").get<int>();
    cf.valid = j.at("valid").get<bool>();
    if (cf.original.size() != cf.perturbed.size()) {
        throw FormatError("counterfactual original and perturbed lengths differ");
    }
    if (cf.span_end < cf.span_start || cf.span_end > cf.original.size()) {
        throw FormatError("counterfactual replaced_span out of range");
    }
    return cf;
}

[[noreturn]] void rethrow_as_format(const char* what, const std::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
}

} // namespace

std::string motifs_to_json(const MotifPair& motifs) {
    json j = json::array({motif_to_obj(motifs.class0), motif_to_obj(motifs.class1)});
    return j.dump(2) + "\n";
}

MotifPair motifs_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        if (!j.is_array() || j.size() != 2) {
            throw FormatError("motifs document must be an array of exactly two motifs");
        }
        MotifPair pair;
        pair.class0 = motif_from_obj(j[0]);
        pair.class1 = motif_from_obj(j[1]);
        if (pair.class0.class_id != 0 || pair.class1.class_id != 1) {
            throw FormatError("motifs must be ordered class 0 then class 1");
        }
        return pair;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        rethrow_as_format("motifs document", e);
    }
}

std::string cfs_to_json(const CfDocument& doc) {
    json j;
    j["dataset"] = doc.dataset;
    j["method"] = doc.method;
    j["batch_runtime_seconds"] = doc.batch.batch_runtime_seconds;
    auto& arr = j["counterfactuals"] = json::array();
    for (std::size_t i = 0; i < doc.batch.items.size(); ++i) {
        arr.push_back(cf_to_obj(doc.batch.items[i], i));
    }
    return j.dump(2) + "\n";
}

CfDocument cfs_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        CfDocument doc;
        doc.dataset = j.at("dataset").get<std::string>();
        doc.method = j.at("method").get<std::string>();
        doc.batch.batch_runtime_seconds = j.at("batch_runtime_seconds").get<double>();
        for (const auto& item : j.at("counterfactuals")) {
            doc.batch.items.push_back(cf_from_obj(item));
        }
        return doc;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        rethrow_as_format("counterfactuals document", e);
    }
}

std::string report_to_json(const ReportDocument& doc) {
    json j;
    j["method"] = doc.method;
    j["dataset"] = doc.dataset;
    j["flip_rate"] = doc.report.flip_rate;
    j["runtime_seconds"] = doc.report.runtime_seconds;
    j["mining_runtime_seconds"] = doc.mining_runtime_seconds;
    j["mean_proximity"] = doc.report.proximity.mean;
    j["sd_proximity"] = doc.report.proximity.sd;
    j["mean_sparsity"] = doc.report.sparsity.mean;
    j["sd_sparsity"] = doc.report.sparsity.sd;
    j["mean_segments"] = doc.report.segments.mean;
    j["sd_segments"] = doc.report.segments.sd;
    auto& arr = j["per_instance"] = json::array();
    for (const InstanceMetrics& im : doc.report.per_instance) {
        json o;
        o["proximity"] = im.proximity;
        o["sparsity"] = im.sparsity;
        o["n_segments"] = im.n_segments;
        o["valid"] = im.valid;
        arr.push_back(o);
    }
    j["meta"] = {{"std_definition", "population"}};
    return j.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        ReportDocument doc;
        doc.method = j.at("method").get<std::string>();
        doc.dataset = j.at("dataset").get<std::string>();
        doc.mining_runtime_seconds = j.at("mining_runtime_seconds").get<double>();
        doc.report.flip_rate = j.at("flip_rate").get<double>();
        doc.report.runtime_seconds = j.at("runtime_seconds").get<double>();
        doc.report.proximity.mean = j.at("mean_proximity").get<double>();
        doc.report.proximity.sd = j.at("sd_proximity").get<double>();
        doc.report.sparsity.mean = j.at("mean_sparsity").get<double>();
        doc.report.sparsity.sd = j.at("sd_sparsity").get<double>();
        doc.report.segments.mean = j.at("mean_segments").get<double>();
        doc.report.segments.sd = j.at("sd_segments").get<double>();
        for (const auto& item : j.at("per_instance")) {
            InstanceMetrics im;
            im.proximity = item.at("proximity").get<double>();
            im.sparsity = item.at("sparsity").get<double>();
            im.n_segments = item.at("n_segments").get<std::size_t>();
            im.valid = item.at("valid").get<bool>();
            doc.report.per_instance.push_back(im);
        }
        return doc;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        rethrow_as_format("report document", e);
    }
}

const std::vector<std::string>& report_scalar_columns() {
    static const std::vector<std::string> columns = {
        "dataset",        "method",        "flip_rate",
        "runtime_seconds", "mining_runtime_seconds",
        "mean_proximity", "sd_proximity",  "mean_sparsity",
        "sd_sparsity",    "mean_segments", "sd_segments"};
    return columns;
}

namespace {

std::vector<std::pair<std::string, std::string>>
scalar_row(const ReportDocument& doc) {
    return {
        {"dataset", doc.dataset},
        {"method", doc.method},
        {"flip_rate", format_double(doc.report.flip_rate)},
        {"runtime_seconds", format_double(doc.report.runtime_seconds)},
        {"mining_runtime_seconds", format_double(doc.mining_runtime_seconds)},
        {"mean_proximity", format_double(doc.report.proximity.mean)},
        {"sd_proximity", format_double(doc.report.proximity.sd)},
        {"mean_sparsity", format_double(doc.report.sparsity.mean)},
        {"sd_sparsity", format_double(doc.report.sparsity.sd)},
        {"mean_segments", format_double(doc.report.segments.mean)},
        {"sd_segments", format_double(doc.report.segments.sd)},
    };
}

} // namespace

std::string reports_to_csv(const std::vector<ReportDocument>& reports) {
    std::ostringstream out;
    const auto& columns = report_scalar_columns();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) out << ',';
        out << columns[i];
    }
    out << '\n';
    for (const ReportDocument& doc : reports) {
        const auto row = scalar_row(doc);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << row[i].second;
        }
        out << '\n';
    }
    return out.str();
}

std::string reports_to_comparison_json(const std::vector<ReportDocument>& reports) {
    json rows = json::array();
    for (const ReportDocument& doc : reports) {
        json o;
        o["dataset"] = doc.dataset;
        o["method"] = doc.method;
        o["flip_rate"] = doc.report.flip_rate;
        o["runtime_seconds"] = doc.report.runtime_seconds;
        o["mining_runtime_seconds"] = doc.mining_runtime_seconds;
        o["mean_proximity"] = doc.report.proximity.mean;
        o["sd_proximity"] = doc.report.proximity.sd;
        o["mean_sparsity"] = doc.report.sparsity.mean;
        o["sd_sparsity"] = doc.report.sparsity.sd;
        o["mean_segments"] = doc.report.segments.mean;
        o["sd_segments"] = doc.report.segments.sd;
        rows.push_back(o);
    }
    return rows.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw FormatError("read failed: " + path.string());
    }
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("cannot open for writing: " + path.string());
    }
    out << text;
    if (!out) {
        throw FormatError("write failed: " + path.string());
    }
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        throw InternalError("format_double: conversion failed");
    }
    return std::string(buf, ptr);
}

} // namespace mgcf
