#include "mgcf/counterfactual.hpp"

#include <chrono>
#include <limits>
#include <string>

#include "mgcf/error.hpp"
#include "mgcf/motif_mining.hpp"

namespace mgcf {

namespace {

int checked_predict(const BlackBoxClassifier& f, const TimeSeries& x,
                    const char* who) {
    if (x.size() != f.input_length()) {
        throw DimensionError(std::string(who) + ": query length " +
                             std::to_string(x.size()) + ", classifier expects " +
                             std::to_string(f.input_length()));
    }
    return f.predict(x);
}

template <typename Fn>
CfBatch timed_batch(const std::vector<TimeSeries>& queries, Fn&& one) {
    CfBatch batch;
    batch.items.reserve(queries.size());
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < queries.size(); ++i) {
        try {
            batch.items.push_back(one(queries[i]));
        } catch (const DimensionError& e) {
            throw DimensionError("query " + std::to_string(i) + ": " + e.what());
        } catch (const FormatError& e) {
            throw FormatError("query " + std::to_string(i) + ": " + e.what());
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    batch.batch_runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
    return batch;
}

} // namespace

Counterfactual generate_cf(const TimeSeries& query, const BlackBoxClassifier& f,
                           const MotifPair& motifs, const LabeledDataset& train) {
    Counterfactual cf;
    cf.original = query;
    cf.original_pred = checked_predict(f, query, "generate_cf");
    cf.target = 1 - cf.original_pred;

    const MotifDescriptor& motif = motifs.for_class(cf.target);
    if (motif.end_idx > query.size() || motif.start_idx >= motif.end_idx) {
        throw DimensionError("generate_cf: motif span [" +
                             std::to_string(motif.start_idx) + ", " +
                             std::to_string(motif.end_idx) +
                             ") does not fit a query of length " +
                             std::to_string(query.size()));
    }
    if (motif.source_series >= train.size() ||
        motif.end_idx > train.length()) {
        throw DimensionError("generate_cf: motif does not address the training set");
    }

    cf.span_start = motif.start_idx;
    cf.span_end = motif.end_idx;
    cf.perturbed = query;
    const TimeSeries& donor = train.series(motif.source_series);
    for (std::size_t j = motif.start_idx; j < motif.end_idx; ++j) {
        cf.perturbed.values[j] = donor.values[j];
    }

    cf.achieved_pred = f.predict(cf.perturbed);
    cf.valid = (cf.achieved_pred == cf.target);
    return cf;
}

CfBatch generate_cf_batch(const std::vector<TimeSeries>& queries,
                          const BlackBoxClassifier& f, const MotifPair& motifs,
                          const LabeledDataset& train) {
    return timed_batch(queries, [&](const TimeSeries& q) {
        return generate_cf(q, f, motifs, train);
    });
}

Counterfactual generate_nun_baseline(const TimeSeries& query,
                                     const BlackBoxClassifier& f,
                                     const LabeledDataset& train) {
    Counterfactual cf;
    cf.original = query;
    cf.original_pred = checked_predict(f, query, "generate_nun_baseline");
    cf.target = 1 - cf.original_pred;
    if (query.size() != train.length()) {
        throw DimensionError("generate_nun_baseline: query length " +
                             std::to_string(query.size()) +
                             ", training series have length " +
                             std::to_string(train.length()));
    }

    double best_d = std::numeric_limits<double>::infinity();
    std::size_t best_idx = train.size();
    for (std::size_t i = 0; i < train.size(); ++i) {
        if (train.label(i) != cf.target) continue;
        const double d = subseq_dist(query.span(), train.series(i).span());
        if (d < best_d) {
            best_d = d;
            best_idx = i;
        }
    }
    if (best_idx == train.size()) {
        throw InternalError("generate_nun_baseline: no training series of class " +
                            std::to_string(cf.target));
    }

    cf.span_start = 0;
    cf.span_end = train.length();
    cf.perturbed = train.series(best_idx);
    cf.achieved_pred = f.predict(cf.perturbed);
    cf.valid = (cf.achieved_pred == cf.target);
    return cf;
}

CfBatch generate_nun_baseline_batch(const std::vector<TimeSeries>& queries,
                                    const BlackBoxClassifier& f,
                                    const LabeledDataset& train) {
    return timed_batch(queries, [&](const TimeSeries& q) {
        return generate_nun_baseline(q, f, train);
    });
}

} // namespace mgcf
