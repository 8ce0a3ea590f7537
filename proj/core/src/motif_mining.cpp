#include "mgcf/motif_mining.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "mgcf/error.hpp"

namespace mgcf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kBlock = 32;

double combine_lanes(const double lanes[8]) {
    return ((lanes[0] + lanes[1]) + (lanes[2] + lanes[3])) +
           ((lanes[4] + lanes[5]) + (lanes[6] + lanes[7]));
}

// The only distance accumulator in the library. Eight independent lanes
// combined in a fixed tree, with a cutoff test after every 32-element
// block, so every caller produces the same bits for the same operands
// whether or not a cutoff is in play. Partial sums of squares never
// decrease, and a cutoff exit happens only once the partial sum already
// reaches `cutoff`, so a caller keeping a running minimum as the cutoff
// still computes the exact minimum.
double sq_dist_bounded(const double* a, const double* b, std::size_t len,
                       double cutoff) {
    double lanes[8] = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + kBlock <= len; i += kBlock) {
        for (std::size_t j = 0; j < kBlock; j += 8) {
            for (std::size_t k = 0; k < 8; ++k) {
                const double d = a[i + j + k] - b[i + j + k];
                lanes[k] += d * d;
            }
        }
        const double partial = combine_lanes(lanes);
        if (partial >= cutoff) return partial;
    }
    for (; i + 8 <= len; i += 8) {
        for (std::size_t k = 0; k < 8; ++k) {
            const double d = a[i + k] - b[i + k];
            lanes[k] += d * d;
        }
    }
    double total = combine_lanes(lanes);
    for (; i < len; ++i) {
        const double d = a[i] - b[i];
        total += d * d;
    }
    return total;
}

// i * log2(i) for small integers, so entropies over counts need no log
// calls in the hot path.
constexpr std::size_t kXlogTableSize = 4097;

const double* xlog2_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kXlogTableSize, 0.0);
        for (std::size_t i = 1; i < kXlogTableSize; ++i) {
            t[i] = static_cast<double>(i) * std::log2(static_cast<double>(i));
        }
        return t;
    }();
    return table.data();
}

double entropy2(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return 0.0;
    const std::size_t n = a + b;
    if (n < kXlogTableSize) {
        const double* xlog = xlog2_table();
        return (xlog[n] - xlog[a] - xlog[b]) / static_cast<double>(n);
    }
    const double nn = static_cast<double>(n);
    const double pa = static_cast<double>(a) / nn;
    const double pb = static_cast<double>(b) / nn;
    return -(pa * std::log2(pa) + pb * std::log2(pb));
}

// Information gain of every (left0, left1) split of a fixed label
// universe, precomputed so split search and bound scans are lookups.
// Degenerate splits (one side empty) are stored as 0.
struct GainTable {
    std::size_t n0 = 0;
    std::size_t n1 = 0;
    double parent = 0.0;
    std::vector<double> gain;

    double at(std::size_t l0, std::size_t l1) const {
        return gain[l0 * (n1 + 1) + l1];
    }
};

GainTable build_gain_table(std::size_t n0, std::size_t n1) {
    GainTable t;
    t.n0 = n0;
    t.n1 = n1;
    t.parent = entropy2(n0, n1);
    t.gain.resize((n0 + 1) * (n1 + 1), 0.0);
    const double n = static_cast<double>(n0 + n1);
    for (std::size_t l0 = 0; l0 <= n0; ++l0) {
        for (std::size_t l1 = 0; l1 <= n1; ++l1) {
            const std::size_t r0 = n0 - l0;
            const std::size_t r1 = n1 - l1;
            if (l0 + l1 == 0 || r0 + r1 == 0) continue;
            const double nl = static_cast<double>(l0 + l1);
            const double nr = static_cast<double>(r0 + r1);
            t.gain[l0 * (n1 + 1) + l1] = t.parent -
                                         (nl / n) * entropy2(l0, l1) -
                                         (nr / n) * entropy2(r0, r1);
        }
    }
    return t;
}

// Best split of a distance-sorted prefix, thresholds at midpoints between
// consecutive distinct values, ties resolved to the smallest threshold.
SplitResult best_split_sorted(const double* dist, const int* lab, std::size_t n,
                              const GainTable& table) {
    if (dist[0] == dist[n - 1]) {
        return {0.0, dist[0]};
    }
    double best_gain = -1.0;
    double best_thr = 0.0;
    std::size_t l0 = 0;
    std::size_t l1 = 0;
    std::size_t i = 0;
    while (i < n) {
        const double v = dist[i];
        while (i < n && dist[i] == v) {
            (lab[i] == 0 ? ++l0 : ++l1);
            ++i;
        }
        if (i == n) break;
        const double thr = v + (dist[i] - v) / 2.0;
        const double g = table.at(l0, l1);
        if (g > best_gain) {
            best_gain = g;
            best_thr = thr;
        }
    }
    return {std::clamp(best_gain, 0.0, 1.0), best_thr};
}

// Optimistic gain bound over all completions of a partial profile whose
// computed part arrives label-sorted by distance: the unknown distances
// can land anywhere, so for each boundary of the computed prefix the
// remaining members of each class are sent wholly to one side; the four
// corner placements dominate every mixed one.
double corner_bound_sorted(const int* sorted_labels, std::size_t k,
                           std::size_t remaining0, std::size_t remaining1,
                           const GainTable& table) {
    if (table.parent == 0.0) return 0.0;
    double best = 0.0;
    std::size_t l0 = 0;
    std::size_t l1 = 0;
    for (std::size_t p = 0; p <= k; ++p) {
        if (p > 0) (sorted_labels[p - 1] == 0 ? ++l0 : ++l1);
        const double g0 = table.at(l0, l1);
        const double g1 = table.at(l0 + remaining0, l1);
        const double g2 = table.at(l0, l1 + remaining1);
        const double g3 = table.at(l0 + remaining0, l1 + remaining1);
        best = std::max({best, g0, g1, g2, g3});
    }
    return std::min(best, 1.0);
}

// Scratch buffers reused across candidates by one worker.
struct AssessScratch {
    std::vector<double> dist;
    std::vector<int> lab;
};

// Profile the candidate one series at a time, keeping the prefix sorted,
// and abandon as soon as no completion can still reach best_so_far.
AssessResult assess_sorted(const Candidate& candidate, const LabeledDataset& ds,
                           double best_so_far, const GainTable& table,
                           AssessScratch& scratch) {
    const std::size_t n = ds.size();
    std::size_t rem0 = table.n0;
    std::size_t rem1 = table.n1;
    auto& dist = scratch.dist;
    auto& lab = scratch.lab;
    dist.clear();
    lab.clear();
    dist.reserve(n);
    lab.reserve(n);

    const bool prune = best_so_far > 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = min_dist_to_series(candidate.values, ds.series(i));
        const int c = ds.label(i);
        const auto pos = static_cast<std::size_t>(
            std::upper_bound(dist.begin(), dist.end(), d) - dist.begin());
        dist.insert(dist.begin() + static_cast<std::ptrdiff_t>(pos), d);
        lab.insert(lab.begin() + static_cast<std::ptrdiff_t>(pos), c);
        (c == 0 ? --rem0 : --rem1);
        if (prune && i + 1 < n) {
            const double bound =
                corner_bound_sorted(lab.data(), i + 1, rem0, rem1, table);
            if (bound < best_so_far) return {0.0, true};
        }
    }
    return {best_split_sorted(dist.data(), lab.data(), n, table).gain, false};
}

std::pair<std::size_t, std::size_t> class_sizes(const LabeledDataset& ds) {
    std::size_t n0 = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        n0 += static_cast<std::size_t>(ds.label(i) == 0);
    }
    return {n0, ds.size() - n0};
}

} // namespace

std::vector<std::size_t> candidate_lengths(std::size_t m,
                                           std::span<const double> fractions) {
    if (fractions.empty()) {
        throw std::invalid_argument("candidate_lengths: fraction list is empty");
    }
    std::vector<std::size_t> lengths;
    for (double f : fractions) {
        if (!(f > 0.0 && f < 1.0)) {
            throw std::invalid_argument("candidate_lengths: fraction " +
                                        std::to_string(f) + " outside (0,1)");
        }
        const auto l = std::max<std::size_t>(
            3, static_cast<std::size_t>(f * static_cast<double>(m)));
        if (l >= m) {
            std::cerr << "warning: fraction " << f << " gives window length " << l
                      << " >= series length " << m << "; skipped\n";
            continue;
        }
        lengths.push_back(l);
    }
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    return lengths;
}

std::vector<Candidate> generate_candidates(const LabeledDataset& ds,
                                           std::span<const double> fractions) {
    const std::size_t m = ds.length();
    const auto lengths = candidate_lengths(m, fractions);
    std::size_t per_series = 0;
    for (auto l : lengths) per_series += m - l + 1;

    std::vector<Candidate> out;
    out.reserve(per_series * ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (auto l : lengths) {
            for (std::size_t s = 0; s + l <= m; ++s) {
                out.push_back({i, s, l, ds.series(i).window(s, l)});
            }
        }
    }
    return out;
}

double subseq_dist(std::span<const double> s, std::span<const double> r) {
    if (s.size() != r.size()) {
        throw DimensionError("subseq_dist: length " + std::to_string(s.size()) +
                             " vs " + std::to_string(r.size()));
    }
    return sq_dist_bounded(s.data(), r.data(), s.size(), kInf);
}

double min_dist_to_series(std::span<const double> s, const TimeSeries& series) {
    if (s.empty()) {
        throw std::invalid_argument("min_dist_to_series: empty subsequence");
    }
    if (s.size() > series.size()) {
        throw DimensionError("min_dist_to_series: subsequence length " +
                             std::to_string(s.size()) + " exceeds series length " +
                             std::to_string(series.size()));
    }
    const std::size_t l = s.size();
    const double* base = series.values.data();
    double best = kInf;
    for (std::size_t w = 0; w + l <= series.size(); ++w) {
        const double d = sq_dist_bounded(s.data(), base + w, l, best);
        if (d < best) best = d;
    }
    return best;
}

DistanceProfile distance_profile(const Candidate& candidate,
                                 const LabeledDataset& ds) {
    DistanceProfile profile;
    profile.distances.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        profile.distances.push_back(min_dist_to_series(candidate.values, ds.series(i)));
    }
    return profile;
}

SplitResult info_gain(std::span<const double> distances,
                      std::span<const int> labels) {
    if (distances.size() != labels.size()) {
        throw DimensionError("info_gain: " + std::to_string(distances.size()) +
                             " distances vs " + std::to_string(labels.size()) +
                             " labels");
    }
    if (distances.empty()) {
        throw std::invalid_argument("info_gain: empty input");
    }
    const std::size_t n = distances.size();

    std::vector<std::pair<double, int>> order(n);
    std::size_t n1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = {distances[i], labels[i]};
        n1 += static_cast<std::size_t>(labels[i] != 0);
    }
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<double> dist(n);
    std::vector<int> lab(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = order[i].first;
        lab[i] = order[i].second;
    }
    const GainTable table = build_gain_table(n - n1, n1);
    return best_split_sorted(dist.data(), lab.data(), n, table);
}

namespace detail {

double optimistic_gain_bound(std::span<const double> computed_distances,
                             std::span<const int> computed_labels,
                             std::size_t remaining_class0,
                             std::size_t remaining_class1) {
    if (computed_distances.size() != computed_labels.size()) {
        throw DimensionError("optimistic_gain_bound: " +
                             std::to_string(computed_distances.size()) +
                             " distances vs " +
                             std::to_string(computed_labels.size()) + " labels");
    }
    const std::size_t k = computed_distances.size();
    std::size_t c0 = 0;
    for (int lab : computed_labels) c0 += static_cast<std::size_t>(lab == 0);
    const std::size_t total0 = c0 + remaining_class0;
    const std::size_t total1 = (k - c0) + remaining_class1;
    if (total0 + total1 == 0) {
        throw std::invalid_argument("optimistic_gain_bound: empty universe");
    }

    std::vector<std::pair<double, int>> order(k);
    for (std::size_t i = 0; i < k; ++i) {
        order[i] = {computed_distances[i], computed_labels[i]};
    }
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> lab(k);
    for (std::size_t i = 0; i < k; ++i) lab[i] = order[i].second;

    const GainTable table = build_gain_table(total0, total1);
    return corner_bound_sorted(lab.data(), k, remaining_class0, remaining_class1,
                               table);
}

} // namespace detail

AssessResult assess_candidate(const Candidate& candidate,
                              const LabeledDataset& ds, double best_so_far) {
    if (!(best_so_far >= 0.0 && best_so_far <= 1.0)) {
        throw std::invalid_argument("assess_candidate: best_so_far " +
                                    std::to_string(best_so_far) +
                                    " outside [0,1]");
    }
    const auto [n0, n1] = class_sizes(ds);
    const GainTable table = build_gain_table(n0, n1);
    AssessScratch scratch;
    return assess_sorted(candidate, ds, best_so_far, table, scratch);
}

namespace {

// Running winner for one class, compared without materializing values.
struct BestSlot {
    bool set = false;
    double quality = 0.0;
    std::size_t length = 0;
    std::size_t source = 0;
    std::size_t start = 0;
};

bool beats(double q, std::size_t len, std::size_t src, std::size_t st,
           const BestSlot& cur) {
    if (!cur.set) return true;
    if (q != cur.quality) return q > cur.quality;
    if (len != cur.length) return len < cur.length;
    if (src != cur.source) return src < cur.source;
    return st < cur.start;
}

void atomic_max(std::atomic<double>& target, double v) {
    double cur = target.load(std::memory_order_relaxed);
    while (v > cur &&
           !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

struct WorkerResult {
    BestSlot best[2];
    std::uint64_t assessed = 0;
    std::uint64_t abandoned = 0;
};

} // namespace

MotifPair mine_motifs(const LabeledDataset& ds, const MiningOptions& options,
                      MiningStats* stats) {
    if (ds.length() < 4) {
        throw DimensionError("mine_motifs: series length " +
                             std::to_string(ds.length()) +
                             " too short, need at least 4");
    }
    const auto candidates = generate_candidates(ds, options.fractions);
    if (candidates.empty()) {
        throw InternalError("mine_motifs: no candidates generated");
    }
    const auto [n0, n1] = class_sizes(ds);
    const GainTable table = build_gain_table(n0, n1);

    unsigned threads = options.threads != 0 ? options.threads
                                            : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, candidates.size()));

    // Best gain found so far per class; other workers read it stale at
    // worst, which only weakens pruning.
    std::atomic<double> class_best[2] = {0.0, 0.0};

    auto work = [&](std::size_t begin, std::size_t end, WorkerResult& out) {
        AssessScratch scratch;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const Candidate& c = candidates[idx];
            const int cls = ds.label(c.source_series);
            const double bsf = options.early_abandon
                                   ? class_best[cls].load(std::memory_order_relaxed)
                                   : 0.0;
            const AssessResult res = assess_sorted(c, ds, bsf, table, scratch);
            ++out.assessed;
            if (res.abandoned) {
                ++out.abandoned;
                continue;
            }
            if (beats(res.quality, c.length, c.source_series, c.start,
                      out.best[cls])) {
                out.best[cls] = {true, res.quality, c.length, c.source_series,
                                 c.start};
                if (options.early_abandon) atomic_max(class_best[cls], res.quality);
            }
        }
    };

    std::vector<WorkerResult> results(threads);
    if (threads == 1) {
        work(0, candidates.size(), results[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::size_t total = candidates.size();
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = total * t / threads;
            const std::size_t end = total * (t + 1) / threads;
            pool.emplace_back(work, begin, end, std::ref(results[t]));
        }
        for (auto& th : pool) th.join();
    }

    MiningStats tally;
    BestSlot merged[2];
    for (const auto& r : results) {
        tally.candidates_assessed += r.assessed;
        tally.candidates_abandoned += r.abandoned;
        for (int cls = 0; cls < 2; ++cls) {
            const BestSlot& slot = r.best[cls];
            if (slot.set && beats(slot.quality, slot.length, slot.source,
                                  slot.start, merged[cls])) {
                merged[cls] = slot;
            }
        }
    }
    if (stats) *stats = tally;

    MotifPair pair;
    for (int cls = 0; cls < 2; ++cls) {
        const BestSlot& slot = merged[cls];
        if (!slot.set) {
            throw InternalError("mine_motifs: class " + std::to_string(cls) +
                                " has no assessed candidate");
        }
        MotifDescriptor d;
        d.source_series = slot.source;
        d.start_idx = slot.start;
        d.end_idx = slot.start + slot.length;
        d.class_id = cls;
        d.quality = slot.quality;
        const auto w = ds.series(slot.source).window(slot.start, slot.length);
        d.values.assign(w.begin(), w.end());
        (cls == 0 ? pair.class0 : pair.class1) = std::move(d);
    }
    return pair;
}

} // namespace mgcf
