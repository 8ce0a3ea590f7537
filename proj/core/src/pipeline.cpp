#include "mgcf/pipeline.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "mgcf/classifier.hpp"
#include "mgcf/counterfactual.hpp"
#include "mgcf/dataset.hpp"
#include "mgcf/error.hpp"
#include "mgcf/metrics.hpp"
#include "mgcf/motif_mining.hpp"

namespace mgcf {

namespace {

// Re-throws library errors with the failing stage's name prefixed,
// preserving the concrete type so exit-code mapping still works.
template <typename Fn>
decltype(auto) stage(const char* name, Fn&& fn) {
    const auto tag = [&](const char* what) {
        return "[" + std::string(name) + "] " + what;
    };
    try {
        return std::forward<Fn>(fn)();
    } catch (const DimensionError& e) {
        throw DimensionError(tag(e.what()));
    } catch (const FormatError& e) {
        throw FormatError(tag(e.what()));
    } catch (const InternalError& e) {
        throw InternalError(tag(e.what()));
    } catch (const Error& e) {
        throw Error(tag(e.what()));
    } catch (const std::filesystem::filesystem_error& e) {
        throw FormatError(tag(e.what()));
    }
}

} // namespace

PipelineResult run_pipeline(const RunConfig& cfg) {
    if (cfg.method != "mgcf" && cfg.method != "nun") {
        throw std::invalid_argument("run_pipeline: unknown method '" + cfg.method +
                                    "'");
    }
    if (cfg.classifier != "1nn") {
        throw std::invalid_argument("run_pipeline: unknown classifier '" +
                                    cfg.classifier + "'");
    }

    const LabeledDataset train =
        stage("dataset", [&] { return load_ucr(cfg.train_path); });
    const LabeledDataset test =
        stage("dataset", [&] { return load_ucr(cfg.test_path); });
    if (train.length() != test.length()) {
        throw DimensionError("[dataset] train series length " +
                             std::to_string(train.length()) +
                             " differs from test series length " +
                             std::to_string(test.length()));
    }

    const OneNNClassifier clf =
        stage("train", [&] { return train_1nn(train); });

    PipelineResult result;
    double mining_seconds = 0.0;
    if (cfg.method == "mgcf") {
        const auto t0 = std::chrono::steady_clock::now();
        result.motifs = stage("mine", [&] {
            MiningOptions opt;
            opt.fractions = cfg.fractions;
            opt.early_abandon = cfg.early_abandon;
            return mine_motifs(train, opt);
        });
        const auto t1 = std::chrono::steady_clock::now();
        mining_seconds = std::chrono::duration<double>(t1 - t0).count();
    }

    CfBatch batch = stage("explain", [&] {
        if (cfg.method == "mgcf") {
            return generate_cf_batch(test.all_series(), clf, result.motifs, train);
        }
        return generate_nun_baseline_batch(test.all_series(), clf, train);
    });
    result.cfs = {train.name(), cfg.method, std::move(batch)};

    EvaluationReport report = stage("evaluate", [&] {
        return evaluate(result.cfs.batch.items,
                        result.cfs.batch.batch_runtime_seconds);
    });
    result.report = {cfg.method, train.name(), mining_seconds, std::move(report)};

    stage("write", [&] {
        std::filesystem::create_directories(cfg.output_dir);
        if (cfg.method == "mgcf") {
            result.motifs_path = cfg.output_dir / "motifs.json";
            write_text_file(result.motifs_path, motifs_to_json(result.motifs));
        }
        result.cfs_path = cfg.output_dir / "cfs.json";
        write_text_file(result.cfs_path, cfs_to_json(result.cfs));
        result.report_path = cfg.output_dir / "report.json";
        write_text_file(result.report_path, report_to_json(result.report));
    });
    return result;
}

std::string compare_reports(const std::vector<std::filesystem::path>& report_paths,
                            const std::string& format) {
    if (report_paths.empty()) {
        throw std::invalid_argument("compare_reports: no report files given");
    }
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("compare_reports: format must be csv or json, got '" +
                                    format + "'");
    }
    std::vector<ReportDocument> docs;
    docs.reserve(report_paths.size());
    for (const auto& path : report_paths) {
        const std::string text = read_text_file(path);
        try {
            docs.push_back(report_from_json(text));
        } catch (const FormatError& e) {
            throw FormatError(path.string() + ": " + e.what());
        }
    }
    return format == "csv" ? reports_to_csv(docs) : reports_to_comparison_json(docs);
}

} // namespace mgcf
