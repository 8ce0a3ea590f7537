#pragma once

#include <cstddef>
#include <vector>

#include "mgcf/counterfactual.hpp"
#include "mgcf/dataset.hpp"

namespace mgcf {

struct InstanceMetrics {
    double proximity = 0.0;      // L1 distance
    double sparsity = 0.0;       // fraction of points left unchanged
    std::size_t n_segments = 0;  // maximal runs of changed points
    bool valid = false;
};

struct Aggregate {
    double mean = 0.0;
    double sd = 0.0;  // population standard deviation
};

struct EvaluationReport {
    std::vector<InstanceMetrics> per_instance;
    double flip_rate = 0.0;
    double runtime_seconds = 0.0;
    Aggregate proximity;
    Aggregate sparsity;
    Aggregate segments;
};

// L1 distance. Throws DimensionError on length mismatch.
double proximity(const TimeSeries& x, const TimeSeries& x_cf);

// 1 - changed/m with exact floating-point inequality (splices copy values
// bit-for-bit, so no tolerance applies).
double sparsity(const TimeSeries& x, const TimeSeries& x_cf);

// Number of maximal runs of consecutive indices where the values differ.
std::size_t count_segments(const TimeSeries& x, const TimeSeries& x_cf);

// Per-instance metrics plus flip rate and mean / population-sd aggregates.
// Throws FormatError on an empty list.
EvaluationReport evaluate(const std::vector<Counterfactual>& cfs,
                          double runtime_seconds);

} // namespace mgcf
