#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mgcf/dataset.hpp"

namespace mgcf {

// Opaque classifier contract: a deterministic map from a series of the
// trained length to a class id in {0,1}. Nothing else is exposed (no
// gradients, probabilities, or activations), so anything built on top of
// this interface stays model-agnostic by construction.
class BlackBoxClassifier {
public:
    virtual ~BlackBoxClassifier() = default;

    // Throws DimensionError if x.size() != input_length().
    virtual int predict(const TimeSeries& x) const = 0;

    virtual std::size_t input_length() const = 0;
};

// Reference model: nearest training series under squared Euclidean
// distance, ties broken by lowest training index. Immutable after
// construction; predict may be called concurrently.
class OneNNClassifier final : public BlackBoxClassifier {
public:
    explicit OneNNClassifier(LabeledDataset train);

    int predict(const TimeSeries& x) const override;
    std::size_t input_length() const override { return train_.length(); }

    const LabeledDataset& training_set() const { return train_; }

private:
    LabeledDataset train_;
};

OneNNClassifier train_1nn(LabeledDataset train);

// Element-wise predict, order-preserving. Throws DimensionError naming the
// offending index if any series has the wrong length.
std::vector<int> predict_batch(const BlackBoxClassifier& f,
                               const std::vector<TimeSeries>& xs);

} // namespace mgcf
