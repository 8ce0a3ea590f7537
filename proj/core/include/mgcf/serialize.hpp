#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mgcf/counterfactual.hpp"
#include "mgcf/metrics.hpp"
#include "mgcf/motif_mining.hpp"

namespace mgcf {

// A counterfactual batch plus the context a downstream evaluation needs.
struct CfDocument {
    std::string dataset;
    std::string method;  // "mgcf" or "nun"
    CfBatch batch;
};

// A full evaluation report ready for serialization.
struct ReportDocument {
    std::string method;
    std::string dataset;
    double mining_runtime_seconds = 0.0;
    EvaluationReport report;
};

// motifs.json: array of exactly two motif objects, class 0 first.
std::string motifs_to_json(const MotifPair& motifs);
MotifPair motifs_from_json(const std::string& text);

// cfs.json: {dataset, method, counterfactuals[], batch_runtime_seconds}.
// batch_runtime_seconds is the isolated runtime metadata field; everything
// else is deterministic for a fixed input.
std::string cfs_to_json(const CfDocument& doc);
CfDocument cfs_from_json(const std::string& text);

// report.json: method, dataset, flip_rate, runtime_seconds,
// mining_runtime_seconds, mean/sd of proximity, sparsity and segments,
// per_instance[], and a meta block disclosing the sd definition.
std::string report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const std::string& text);

// The scalar report columns, in the order used by every CSV emitter.
const std::vector<std::string>& report_scalar_columns();

// One header line plus one row per report.
std::string reports_to_csv(const std::vector<ReportDocument>& reports);

// Comparison table as JSON: array of rows with the scalar columns only.
std::string reports_to_comparison_json(const std::vector<ReportDocument>& reports);

// Whole-file helpers. Throw FormatError when the file cannot be read/written.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

} // namespace mgcf
