#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mgcf/dataset.hpp"

namespace mgcf {

// One window of one training series, kept as a view; `values` aliases the
// source dataset, which is immutable, so candidates stay cheap to copy.
struct Candidate {
    std::size_t source_series = 0;
    std::size_t start = 0;
    std::size_t length = 0;
    std::span<const double> values;
};

// Minimum sliding-window squared distance from one candidate to every
// series in a dataset, index-aligned with the dataset.
struct DistanceProfile {
    std::vector<double> distances;
};

// A mined motif: where it lives in the training set, which class it
// discriminates for, and how well (information gain in bits).
struct MotifDescriptor {
    std::size_t source_series = 0;
    std::size_t start_idx = 0;
    std::size_t end_idx = 0;   // exclusive
    int class_id = 0;
    double quality = 0.0;
    std::vector<double> values;

    std::size_t length() const { return end_idx - start_idx; }
    bool operator==(const MotifDescriptor&) const = default;
};

// The per-class winners of a mining run.
struct MotifPair {
    MotifDescriptor class0;
    MotifDescriptor class1;

    const MotifDescriptor& for_class(int class_id) const {
        return class_id == 0 ? class0 : class1;
    }
    bool operator==(const MotifPair&) const = default;
};

struct SplitResult {
    double gain = 0.0;       // bits, in [0,1] for binary labels
    double threshold = 0.0;  // distance threshold achieving the gain
};

struct AssessResult {
    double quality = 0.0;
    bool abandoned = false;  // true -> quality is a lower bound (0), not the gain
};

struct MiningOptions {
    std::vector<double> fractions{0.3, 0.5, 0.7};
    bool early_abandon = true;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Counters filled by mine_motifs when requested.
struct MiningStats {
    std::uint64_t candidates_assessed = 0;
    std::uint64_t candidates_abandoned = 0;
};

// Window lengths l = max(3, floor(fraction * m)), deduplicated ascending.
// Fractions must lie in (0,1); a fraction whose length would reach m is
// skipped with a warning on stderr (unreachable for m >= 4).
std::vector<std::size_t> candidate_lengths(std::size_t m,
                                           std::span<const double> fractions);

// Every window of every series at every candidate length:
// n * sum_l (m - l + 1) candidates, ordered by (series, length, start).
std::vector<Candidate> generate_candidates(const LabeledDataset& ds,
                                           std::span<const double> fractions);

// Sum of squared pointwise differences; no length normalization.
// Throws DimensionError on length mismatch.
double subseq_dist(std::span<const double> s, std::span<const double> r);

// Exact minimum of subseq_dist(s, window) over all windows of the series.
// Throws DimensionError if s is longer than the series.
double min_dist_to_series(std::span<const double> s, const TimeSeries& series);

// distances[i] = min_dist_to_series(candidate, ds.series(i)) for every i.
DistanceProfile distance_profile(const Candidate& candidate,
                                 const LabeledDataset& ds);

// Best binary-entropy information-gain split of the distances. Thresholds
// are midpoints between consecutive distinct sorted values; ties prefer the
// smallest threshold. A single distinct value yields {0, that value};
// single-class labels yield gain 0.
SplitResult info_gain(std::span<const double> distances,
                      std::span<const int> labels);

// Information gain of the candidate's full distance profile, computing the
// profile one series at a time. When best_so_far > 0, the computation may
// be abandoned once an optimistic upper bound on the achievable gain drops
// strictly below best_so_far; an abandoned result reports quality 0 and can
// never have beaten (or tied) best_so_far. best_so_far must be in [0,1];
// 0 disables abandonment.
AssessResult assess_candidate(const Candidate& candidate,
                              const LabeledDataset& ds, double best_so_far);

// Assess every candidate and return the best motif of each class, a
// candidate's class being the label of its source series. Ties break by
// higher gain, then shorter length, then lower source index, then lower
// start index, so the result is deterministic, independent of evaluation
// order and of early abandonment. Requires m >= 4.
MotifPair mine_motifs(const LabeledDataset& ds, const MiningOptions& options = {},
                      MiningStats* stats = nullptr);

namespace detail {

// Upper bound on the information gain reachable by any completion of a
// partially computed profile: the remaining r0/r1 series (distances
// unknown, labels known) are placed at the optimistic extremes, all four
// class-to-side corners, across every split boundary of the computed
// prefix. Exact optimum over completions; exposed for the soundness tests.
double optimistic_gain_bound(std::span<const double> computed_distances,
                             std::span<const int> computed_labels,
                             std::size_t remaining_class0,
                             std::size_t remaining_class1);

} // namespace detail

} // namespace mgcf
