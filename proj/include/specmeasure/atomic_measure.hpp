#pragma once

#include <Eigen/Core>

#include "specmeasure/lp_geometry.hpp"

namespace specmeasure {

/// Finite measure with finitely many atoms, kept in canonical form: locations
/// strictly increasing, weights strictly positive.
class AtomicMeasure {
public:
    AtomicMeasure() = default;

    /// Sorts by location and merges atoms at identical locations by summing
    /// their weights. Zero weights are dropped; negative weights throw.
    AtomicMeasure(Eigen::VectorXd locations, Eigen::VectorXd weights);

    const Eigen::VectorXd& locations() const noexcept { return locations_; }
    const Eigen::VectorXd& weights() const noexcept { return weights_; }
    Eigen::Index size() const noexcept { return locations_.size(); }
    bool empty() const noexcept { return locations_.size() == 0; }

    double total_mass() const noexcept { return cumulative_.size() ? cumulative_[cumulative_.size() - 1] : 0.0; }

    /// Right-continuous distribution function x -> mass of (-inf, x].
    double cdf(double x) const;

    /// Mass of (-inf, x).
    double cdf_left(double x) const;

    /// Same locations, weights multiplied by `factor` (> 0).
    AtomicMeasure scaled(double factor) const;

    /// sum_j weight_j * fn(location_j)
    template <typename Fn>
    double integrate(Fn&& fn) const {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < size(); ++j) acc += weights_[j] * fn(locations_[j]);
        return acc;
    }

private:
    Eigen::VectorXd locations_;
    Eigen::VectorXd weights_;
    Eigen::VectorXd cumulative_;
};

/// Atomic measure on [0, pi/2] tagged with the norm order its angles and
/// masses refer to.
class DiscreteSpectralMeasure : public AtomicMeasure {
public:
    DiscreteSpectralMeasure(AtomicMeasure atoms, NormOrder p)
        : AtomicMeasure(std::move(atoms)), p_(p) {}
    DiscreteSpectralMeasure(Eigen::VectorXd angles, Eigen::VectorXd weights, NormOrder p)
        : AtomicMeasure(std::move(angles), std::move(weights)), p_(p) {}

    const NormOrder& norm() const noexcept { return p_; }

    DiscreteSpectralMeasure scaled(double factor) const {
        return DiscreteSpectralMeasure(AtomicMeasure::scaled(factor), p_);
    }

private:
    NormOrder p_;
};

/// The two moment sums int sin/||.||_p dPhi and int cos/||.||_p dPhi.
struct MomentSums {
    double sine = 0.0;
    double cosine = 0.0;
};

MomentSums moment_sums(const DiscreteSpectralMeasure& measure);

}  // namespace specmeasure
