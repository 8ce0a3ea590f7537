#pragma once

#include <cstddef>
#include <vector>

#include "mgcf/classifier.hpp"
#include "mgcf/dataset.hpp"
#include "mgcf/motif_mining.hpp"

namespace mgcf {

// A perturbed copy of a query plus the bookkeeping needed to score it.
// `perturbed` equals `original` outside [span_start, span_end); validity is
// measured, never enforced, so invalid explanations stay countable.
struct Counterfactual {
    TimeSeries original;
    TimeSeries perturbed;
    std::size_t span_start = 0;
    std::size_t span_end = 0;
    int original_pred = 0;
    int target = 0;        // always 1 - original_pred
    int achieved_pred = 0;
    bool valid = false;    // achieved_pred == target
};

struct CfBatch {
    std::vector<Counterfactual> items;
    double batch_runtime_seconds = 0.0;  // wall clock around the whole batch
};

// Splice the target class's motif into the query at the motif's own
// coordinates: target = 1 - f(query), donor values are the motif's source
// training series over [start_idx, end_idx). The result is returned whether
// or not the label actually flipped.
Counterfactual generate_cf(const TimeSeries& query, const BlackBoxClassifier& f,
                           const MotifPair& motifs, const LabeledDataset& train);

// Element-wise generate_cf, order-preserving; a failing query aborts the
// batch with its index. Wall-clock duration of the loop is recorded.
CfBatch generate_cf_batch(const std::vector<TimeSeries>& queries,
                          const BlackBoxClassifier& f, const MotifPair& motifs,
                          const LabeledDataset& train);

// Baseline: returns the nearest training series of the target class
// wholesale (replaced span = the full length).
Counterfactual generate_nun_baseline(const TimeSeries& query,
                                     const BlackBoxClassifier& f,
                                     const LabeledDataset& train);

CfBatch generate_nun_baseline_batch(const std::vector<TimeSeries>& queries,
                                    const BlackBoxClassifier& f,
                                    const LabeledDataset& train);

} // namespace mgcf
