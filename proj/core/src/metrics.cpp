#include "mgcf/metrics.hpp"

#include <cmath>
#include <string>

#include "mgcf/error.hpp"

namespace mgcf {

namespace {

void check_lengths(const TimeSeries& x, const TimeSeries& x_cf, const char* who) {
    if (x.size() != x_cf.size()) {
        throw DimensionError(std::string(who) + ": length " +
                             std::to_string(x.size()) + " vs " +
                             std::to_string(x_cf.size()));
    }
}

Aggregate aggregate_of(const std::vector<double>& xs) {
    Aggregate a;
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double v : xs) sum += v;
    a.mean = sum / n;
    double ss = 0.0;
    for (double v : xs) {
        const double d = v - a.mean;
        ss += d * d;
    }
    a.sd = std::sqrt(ss / n);
    return a;
}

} // namespace

double proximity(const TimeSeries& x, const TimeSeries& x_cf) {
    check_lengths(x, x_cf, "proximity");
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        sum += std::abs(x_cf.values[j] - x.values[j]);
    }
    return sum;
}

double sparsity(const TimeSeries& x, const TimeSeries& x_cf) {
    check_lengths(x, x_cf, "sparsity");
    std::size_t changed = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        changed += static_cast<std::size_t>(x_cf.values[j] != x.values[j]);
    }
    return 1.0 - static_cast<double>(changed) / static_cast<double>(x.size());
}

std::size_t count_segments(const TimeSeries& x, const TimeSeries& x_cf) {
    check_lengths(x, x_cf, "count_segments");
    std::size_t segments = 0;
    bool in_run = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const bool differs = x_cf.values[j] != x.values[j];
        if (differs && !in_run) ++segments;
        in_run = differs;
    }
    return segments;
}

EvaluationReport evaluate(const std::vector<Counterfactual>& cfs,
                          double runtime_seconds) {
    if (cfs.empty()) {
        throw FormatError("evaluate: empty counterfactual list");
    }
    EvaluationReport report;
    report.per_instance.reserve(cfs.size());
    report.runtime_seconds = runtime_seconds;

    std::vector<double> prox, spar, segs;
    prox.reserve(cfs.size());
    spar.reserve(cfs.size());
    segs.reserve(cfs.size());
    std::size_t valid = 0;
    for (const Counterfactual& cf : cfs) {
        InstanceMetrics im;
        im.proximity = proximity(cf.original, cf.perturbed);
        im.sparsity = sparsity(cf.original, cf.perturbed);
        im.n_segments = count_segments(cf.original, cf.perturbed);
        im.valid = cf.valid;
        valid += static_cast<std::size_t>(cf.valid);
        prox.push_back(im.proximity);
        spar.push_back(im.sparsity);
        segs.push_back(static_cast<double>(im.n_segments));
        report.per_instance.push_back(im);
    }
    report.flip_rate = static_cast<double>(valid) / static_cast<double>(cfs.size());
    report.proximity = aggregate_of(prox);
    report.sparsity = aggregate_of(spar);
    report.segments = aggregate_of(segs);
    return report;
}

} // namespace mgcf
