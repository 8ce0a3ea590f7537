#include <chrono>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mgcf/classifier.hpp"
#include "mgcf/counterfactual.hpp"
#include "mgcf/dataset.hpp"
#include "mgcf/error.hpp"
#include "mgcf/metrics.hpp"
#include "mgcf/motif_mining.hpp"
#include "mgcf/pipeline.hpp"
#include "mgcf/serialize.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct MineArgs {
    std::string train;
    std::vector<double> fractions{0.3, 0.5, 0.7};
    bool no_early_abandon = false;
    unsigned threads = 0;
    std::string out = "motifs.json";
};

void do_mine(const MineArgs& args) {
    const mgcf::LabeledDataset train = mgcf::load_ucr(args.train);
    mgcf::MiningOptions opt;
    opt.fractions = args.fractions;
    opt.early_abandon = !args.no_early_abandon;
    opt.threads = args.threads;

    mgcf::MiningStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    const mgcf::MotifPair motifs = mgcf::mine_motifs(train, opt, &stats);
    const double dt = seconds_since(t0);

    mgcf::write_text_file(args.out, mgcf::motifs_to_json(motifs));
    std::fprintf(stderr,
                 "mined %s in %.3f s: %llu candidates assessed, %llu abandoned\n",
                 train.name().c_str(), dt,
                 static_cast<unsigned long long>(stats.candidates_assessed),
                 static_cast<unsigned long long>(stats.candidates_abandoned));
    for (int cls = 0; cls < 2; ++cls) {
        const mgcf::MotifDescriptor& m = motifs.for_class(cls);
        std::fprintf(stderr,
                     "class %d motif: series %zu, span [%zu, %zu), gain %.6f\n",
                     cls, m.source_series, m.start_idx, m.end_idx, m.quality);
    }
}

struct ExplainArgs {
    std::string train;
    std::string test;
    std::string motifs;
    std::string method = "mgcf";
    std::string out = "cfs.json";
};

void do_explain(const ExplainArgs& args) {
    const mgcf::LabeledDataset train = mgcf::load_ucr(args.train);
    const mgcf::LabeledDataset test = mgcf::load_ucr(args.test);
    const mgcf::OneNNClassifier clf = mgcf::train_1nn(train);

    mgcf::CfBatch batch;
    if (args.method == "mgcf") {
        const mgcf::MotifPair motifs =
            mgcf::motifs_from_json(mgcf::read_text_file(args.motifs));
        batch = mgcf::generate_cf_batch(test.all_series(), clf, motifs, train);
    } else {
        batch = mgcf::generate_nun_baseline_batch(test.all_series(), clf, train);
    }

    const mgcf::CfDocument doc{train.name(), args.method, std::move(batch)};
    mgcf::write_text_file(args.out, mgcf::cfs_to_json(doc));
    std::fprintf(stderr, "generated %zu counterfactuals (%s) in %.3f s\n",
                 doc.batch.items.size(), args.method.c_str(),
                 doc.batch.batch_runtime_seconds);
}

struct EvaluateArgs {
    std::string cfs;
    std::string out = "report.json";
    double mining_runtime = 0.0;
};

void do_evaluate(const EvaluateArgs& args) {
    const mgcf::CfDocument doc = mgcf::cfs_from_json(mgcf::read_text_file(args.cfs));
    const mgcf::EvaluationReport report =
        mgcf::evaluate(doc.batch.items, doc.batch.batch_runtime_seconds);
    const mgcf::ReportDocument out{doc.method, doc.dataset, args.mining_runtime,
                                   report};
    mgcf::write_text_file(args.out, mgcf::report_to_json(out));
    std::fprintf(stderr,
                 "%s %s: flip_rate %.3f, mean_sparsity %.3f, mean_segments %.3f\n",
                 doc.dataset.c_str(), doc.method.c_str(), report.flip_rate,
                 report.sparsity.mean, report.segments.mean);
}

struct TableArgs {
    std::vector<std::string> reports;
    std::string format = "csv";
    std::string out;
};

void do_table(const TableArgs& args) {
    std::vector<std::filesystem::path> paths(args.reports.begin(),
                                             args.reports.end());
    const std::string text = mgcf::compare_reports(paths, args.format);
    if (args.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        mgcf::write_text_file(args.out, text);
    }
}

struct RunArgs {
    std::string train;
    std::string test;
    std::vector<double> fractions{0.3, 0.5, 0.7};
    std::string method = "mgcf";
    std::string classifier = "1nn";
    bool no_early_abandon = false;
    std::string out_dir = "out";
};

void do_run(const RunArgs& args) {
    mgcf::RunConfig cfg;
    cfg.train_path = args.train;
    cfg.test_path = args.test;
    cfg.fractions = args.fractions;
    cfg.method = args.method;
    cfg.classifier = args.classifier;
    cfg.early_abandon = !args.no_early_abandon;
    cfg.output_dir = args.out_dir;

    const mgcf::PipelineResult result = mgcf::run_pipeline(cfg);
    const mgcf::EvaluationReport& r = result.report.report;
    std::fprintf(stderr,
                 "%s %s: flip_rate %.3f, mean_sparsity %.3f, mean_segments %.3f, "
                 "cf_batch %.3f s, mining %.3f s\n",
                 result.report.dataset.c_str(), result.report.method.c_str(),
                 r.flip_rate, r.sparsity.mean, r.segments.mean, r.runtime_seconds,
                 result.report.mining_runtime_seconds);
    if (!result.motifs_path.empty()) {
        std::fprintf(stderr, "wrote %s\n", result.motifs_path.c_str());
    }
    std::fprintf(stderr, "wrote %s\n", result.cfs_path.c_str());
    std::fprintf(stderr, "wrote %s\n", result.report_path.c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motif-guided counterfactual explanations for binary time-series"
                 " classifiers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "mgcf 0.1.0");

    MineArgs mine_args;
    CLI::App* mine = app.add_subcommand(
        "mine", "Mine the most class-discriminative motif per class");
    mine->add_option("--train", mine_args.train, "Training set, UCR text format")
        ->required();
    mine->add_option("--fractions", mine_args.fractions,
                     "Window lengths as fractions of the series length")
        ->delimiter(',')
        ->capture_default_str();
    mine->add_flag("--no-early-abandon", mine_args.no_early_abandon,
                   "Assess every candidate exhaustively");
    mine->add_option("--threads", mine_args.threads,
                     "Worker threads (0 = hardware concurrency)")
        ->capture_default_str();
    mine->add_option("--out", mine_args.out, "Output motif file")
        ->capture_default_str();
    mine->callback([&] { do_mine(mine_args); });

    ExplainArgs explain_args;
    CLI::App* explain = app.add_subcommand(
        "explain", "Generate counterfactuals for every test series");
    explain->add_option("--train", explain_args.train,
                        "Training set, UCR text format")
        ->required();
    explain->add_option("--test", explain_args.test, "Test set, UCR text format")
        ->required();
    explain->add_option("--motifs", explain_args.motifs,
                        "Motif file from `mine` (required for --method mgcf)");
    explain->add_option("--method", explain_args.method, "mgcf or nun")
        ->check(CLI::IsMember({"mgcf", "nun"}))
        ->capture_default_str();
    explain->add_option("--out", explain_args.out, "Output counterfactual file")
        ->capture_default_str();
    explain->callback([&] {
        if (explain_args.method == "mgcf" && explain_args.motifs.empty()) {
            throw CLI::RequiredError("--motifs (with --method mgcf)");
        }
        do_explain(explain_args);
    });

    EvaluateArgs evaluate_args;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "Score a counterfactual file and write a report");
    evaluate->add_option("--cfs", evaluate_args.cfs,
                         "Counterfactual file from `explain`")
        ->required();
    evaluate->add_option("--out", evaluate_args.out, "Output report file")
        ->capture_default_str();
    evaluate
        ->add_option("--mining-runtime", evaluate_args.mining_runtime,
                     "Mining wall-clock seconds to record in the report")
        ->capture_default_str();
    evaluate->callback([&] { do_evaluate(evaluate_args); });

    TableArgs report_args;
    CLI::App* report = app.add_subcommand(
        "report", "Render one report file as a table");
    report->add_option("--in", report_args.reports, "Report file")
        ->required()
        ->expected(1);
    report->add_option("--format", report_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    report->add_option("--out", report_args.out,
                       "Output file (stdout when omitted)");
    report->callback([&] { do_table(report_args); });

    RunArgs run_args;
    CLI::App* run = app.add_subcommand(
        "run", "Full pipeline: load, train, mine, explain, evaluate, write");
    run->add_option("--train", run_args.train, "Training set, UCR text format")
        ->required();
    run->add_option("--test", run_args.test, "Test set, UCR text format")
        ->required();
    run->add_option("--fractions", run_args.fractions,
                    "Window lengths as fractions of the series length")
        ->delimiter(',')
        ->capture_default_str();
    run->add_option("--method", run_args.method, "mgcf or nun")
        ->check(CLI::IsMember({"mgcf", "nun"}))
        ->capture_default_str();
    run->add_option("--classifier", run_args.classifier, "Classifier to train")
        ->check(CLI::IsMember({"1nn"}))
        ->capture_default_str();
    run->add_flag("--no-early-abandon", run_args.no_early_abandon,
                  "Assess every candidate exhaustively");
    run->add_option("--out-dir", run_args.out_dir,
                    "Directory for motifs.json, cfs.json, report.json")
        ->envname("MGCF_OUT_DIR")
        ->capture_default_str();
    run->callback([&] { do_run(run_args); });

    TableArgs compare_args;
    CLI::App* compare = app.add_subcommand(
        "compare", "Merge report files into one comparison table");
    compare->add_option("--reports", compare_args.reports, "Report files")
        ->required();
    compare->add_option("--format", compare_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    compare->add_option("--out", compare_args.out,
                        "Output file (stdout when omitted)");
    compare->callback([&] { do_table(compare_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const mgcf::InternalError& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    } catch (const mgcf::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 0;
}
