#include "mgcf/classifier.hpp"

#include <string>

#include "mgcf/error.hpp"
#include "mgcf/motif_mining.hpp"

namespace mgcf {

OneNNClassifier::OneNNClassifier(LabeledDataset train) : train_(std::move(train)) {}

int OneNNClassifier::predict(const TimeSeries& x) const {
    if (x.size() != train_.length()) {
        throw DimensionError("predict: input length " + std::to_string(x.size()) +
                             ", classifier expects " + std::to_string(train_.length()));
    }
    std::size_t best_idx = 0;
    double best_d = subseq_dist(x.span(), train_.series(0).span());
    for (std::size_t i = 1; i < train_.size(); ++i) {
        double d = subseq_dist(x.span(), train_.series(i).span());
        if (d < best_d) {
            best_d = d;
            best_idx = i;
        }
    }
    return train_.label(best_idx);
}

OneNNClassifier train_1nn(LabeledDataset train) {
    return OneNNClassifier(std::move(train));
}

std::vector<int> predict_batch(const BlackBoxClassifier& f,
                               const std::vector<TimeSeries>& xs) {
    std::vector<int> out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].size() != f.input_length()) {
            throw DimensionError("predict_batch: series " + std::to_string(i) +
                                 " has length " + std::to_string(xs[i].size()) +
                                 ", classifier expects " +
                                 std::to_string(f.input_length()));
        }
        out.push_back(f.predict(xs[i]));
    }
    return out;
}

} // namespace mgcf
