#pragma once

#include <Eigen/Core>

#include "specmeasure/atomic_measure.hpp"
#include "specmeasure/lp_geometry.hpp"
#include "specmeasure/pseudo_obs.hpp"

namespace specmeasure {

/// The observations whose pseudo-observation radius ||(1/u1, 1/u2)||_p
/// reaches n/k, with their angles arctan(u2/u1) and angular scores.
struct AngularSample {
    Eigen::Index n = 0;
    Eigen::Index k = 0;
    NormOrder p = NormOrder::infinity();
    Eigen::Matrix<Eigen::Index, Eigen::Dynamic, 1> indices;  // 0-based rows, increasing
    Eigen::VectorXd angles;                                   // in (0, pi/2)
    Eigen::VectorXd scores;                                   // f(angle), in (-1, 1)

    Eigen::Index count() const noexcept { return indices.size(); }
};

/// Selects the k angular extremes. Requires 1 <= k <= n (ParameterError).
/// For p in {1, 2, inf} the threshold test runs in exact integer arithmetic
/// on the reversed ranks; other orders compare the norm in double precision.
AngularSample select_extremes(const PseudoObservations& pobs, Eigen::Index k, const NormOrder& p);

/// Empirical spectral measure: mass 1/k at every selected angle.
DiscreteSpectralMeasure empirical_spectral_measure(const AngularSample& ang);

/// Empirical spectral probability measure: mass 1/N at every selected angle.
DiscreteSpectralMeasure empirical_spectral_prob(const AngularSample& ang);

}  // namespace specmeasure
