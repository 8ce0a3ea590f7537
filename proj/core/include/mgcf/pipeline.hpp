#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mgcf/serialize.hpp"

namespace mgcf {

// Everything one end-to-end run needs. No randomness is involved anywhere,
// so there is no seed: identical configs give identical artifacts (runtime
// metadata aside).
struct RunConfig {
    std::filesystem::path train_path;
    std::filesystem::path test_path;
    std::vector<double> fractions{0.3, 0.5, 0.7};
    std::string method = "mgcf";      // "mgcf" | "nun"
    std::string classifier = "1nn";
    bool early_abandon = true;
    std::filesystem::path output_dir = "out";
};

struct PipelineResult {
    MotifPair motifs;
    CfDocument cfs;
    ReportDocument report;
    std::filesystem::path motifs_path;
    std::filesystem::path cfs_path;
    std::filesystem::path report_path;
};

// load -> train -> mine -> explain -> evaluate -> write motifs.json,
// cfs.json and report.json under output_dir. Stage failures propagate with
// the stage name ("[dataset] ...", "[mine] ...") prefixed to the message.
PipelineResult run_pipeline(const RunConfig& cfg);

// Load report files and render one row per (dataset, method).
// format is "csv" or "json".
std::string compare_reports(const std::vector<std::filesystem::path>& report_paths,
                            const std::string& format);

} // namespace mgcf
