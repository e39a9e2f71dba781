#pragma once

#include <Eigen/Core>

#include "specmeasure/atomic_measure.hpp"

namespace specmeasure {

/// Maps an L_1 spectral measure on [0, pi/2] to the measure H on [0, 1]
/// through w = sin(theta) / (sin(theta) + cos(theta)). ParameterError when
/// the input does not use the L_1 norm.
AtomicMeasure spectral_to_H(const DiscreteSpectralMeasure& phi1);

/// Piecewise-affine Pickands dependence function
///   A(v) = 1 - v + int_0^v H([0, w]) dw.
class PickandsFunction {
public:
    PickandsFunction(Eigen::VectorXd knots, Eigen::VectorXd values);

    /// Knots in [0, 1], strictly increasing, first 0 and last 1.
    const Eigen::VectorXd& knots() const noexcept { return knots_; }
    const Eigen::VectorXd& values() const noexcept { return values_; }

    /// Linear interpolation between knots; v is clamped to [0, 1].
    double operator()(double v) const;

    /// Slopes of the affine pieces, one per gap between knots.
    Eigen::VectorXd slopes() const;

private:
    Eigen::VectorXd knots_;
    Eigen::VectorXd values_;
};

/// Integrates the step function H([0, w]) exactly.
PickandsFunction pickands_function(const AtomicMeasure& H);

}  // namespace specmeasure
