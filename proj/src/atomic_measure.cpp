#include "specmeasure/atomic_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "specmeasure/errors.hpp"

namespace specmeasure {

AtomicMeasure::AtomicMeasure(Eigen::VectorXd locations, Eigen::VectorXd weights) {
    if (locations.size() != weights.size())
        throw ParameterError("atom locations and weights differ in length");
    const Eigen::Index m = locations.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return locations[a] < locations[b]; });

    std::vector<double> loc, w;
    loc.reserve(order.size());
    w.reserve(order.size());
    for (const auto i : order) {
        if (!std::isfinite(locations[i]) || !std::isfinite(weights[i]))
            throw ParameterError("atom with non-finite location or weight");
        if (weights[i] < 0.0) throw ParameterError("negative atom weight");
        if (weights[i] == 0.0) continue;
        if (!loc.empty() && loc.back() == locations[i]) {
            w.back() += weights[i];
        } else {
            loc.push_back(locations[i]);
            w.push_back(weights[i]);
        }
    }
    locations_ = Eigen::Map<Eigen::VectorXd>(loc.data(), static_cast<Eigen::Index>(loc.size()));
    weights_ = Eigen::Map<Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
    cumulative_.resize(weights_.size());
    std::partial_sum(weights_.begin(), weights_.end(), cumulative_.begin());
}

double AtomicMeasure::cdf(double x) const {
    const auto it = std::upper_bound(locations_.begin(), locations_.end(), x);
    const auto count = it - locations_.begin();
    return count == 0 ? 0.0 : cumulative_[count - 1];
}

double AtomicMeasure::cdf_left(double x) const {
    const auto it = std::lower_bound(locations_.begin(), locations_.end(), x);
    const auto count = it - locations_.begin();
    return count == 0 ? 0.0 : cumulative_[count - 1];
}

AtomicMeasure AtomicMeasure::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw ParameterError("scale factor must be positive");
    return AtomicMeasure(locations_, weights_ * factor);
}

MomentSums moment_sums(const DiscreteSpectralMeasure& measure) {
    MomentSums out;
    const auto& p = measure.norm();
    for (Eigen::Index j = 0; j < measure.size(); ++j) {
        const double t = measure.locations()[j];
        const double s = std::sin(t);
        const double c = std::cos(t);
        const double r = lp_norm(s, c, p);
        out.sine += measure.weights()[j] * s / r;
        out.cosine += measure.weights()[j] * c / r;
    }
    return out;
}

}  // namespace specmeasure
