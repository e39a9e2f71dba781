#include "specmeasure/pickands.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "specmeasure/errors.hpp"

namespace specmeasure {

AtomicMeasure spectral_to_H(const DiscreteSpectralMeasure& phi1) {
    if (!phi1.norm().is_one()) throw ParameterError("Pickands transform needs a spectral measure for the L1 norm");
    Eigen::VectorXd w(phi1.size());
    for (Eigen::Index j = 0; j < phi1.size(); ++j) {
        const double t = phi1.locations()[j];
        const double s = std::sin(t);
        w[j] = t <= 0.0 ? 0.0 : s / (s + std::cos(t));
    }
    return AtomicMeasure(w, phi1.weights());
}

PickandsFunction::PickandsFunction(Eigen::VectorXd knots, Eigen::VectorXd values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.size() < 2 || knots_.size() != values_.size() || knots_[0] != 0.0 || knots_[knots_.size() - 1] != 1.0)
        throw ParameterError("Pickands knots must run from 0 to 1 with one value per knot");
}

double PickandsFunction::operator()(double v) const {
    v = std::clamp(v, 0.0, 1.0);
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), v);
    const auto hi = std::min<Eigen::Index>(it - knots_.begin(), knots_.size() - 1);
    const auto lo = hi - 1;
    const double t = (v - knots_[lo]) / (knots_[hi] - knots_[lo]);
    return values_[lo] + t * (values_[hi] - values_[lo]);
}

Eigen::VectorXd PickandsFunction::slopes() const {
    const Eigen::Index m = knots_.size() - 1;
    return (values_.tail(m) - values_.head(m)).cwiseQuotient(knots_.tail(m) - knots_.head(m));
}

PickandsFunction pickands_function(const AtomicMeasure& H) {
    std::vector<double> knots{0.0};
    for (const double w : H.locations())
        if (w > 0.0 && w < 1.0) knots.push_back(w);
    knots.push_back(1.0);

    Eigen::VectorXd k = Eigen::Map<Eigen::VectorXd>(knots.data(), static_cast<Eigen::Index>(knots.size()));
    Eigen::VectorXd a(k.size());
    a[0] = 1.0;
    // On [k_j, k_{j+1}) the slope is H([0, k_j]) - 1.
    for (Eigen::Index j = 0; j + 1 < k.size(); ++j) a[j + 1] = a[j] + (H.cdf(k[j]) - 1.0) * (k[j + 1] - k[j]);
    return PickandsFunction(std::move(k), std::move(a));
}

}  // namespace specmeasure
