#pragma once

#include <Eigen/Core>

#include "specmeasure/atomic_measure.hpp"
#include "specmeasure/empirical.hpp"

namespace specmeasure {

/// Root of the Lagrange equation sum_i A_i / (1 + mu A_i) = 0.
struct MultiplierSolution {
    double mu = 0.0;
    double residual = 0.0;  // |psi(mu)|
    int iterations = 0;
    // Open interval on which every weight 1 / (1 + mu A_i) stays positive.
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
};

/// psi(mu) = mean of A / (1 + mu A). Throws DomainError when 1 + mu A <= 0
/// for some score.
double psi(double mu, const Eigen::Ref<const Eigen::VectorXd>& scores);

/// Derivative of psi, -mean of A^2 / (1 + mu A)^2.
double psi_derivative(double mu, const Eigen::Ref<const Eigen::VectorXd>& scores);

/// Solves psi(mu) = 0 on the whole positivity interval (-1/max A, -1/min A)
/// by Newton iteration safeguarded with a shrinking bracket. All-zero scores
/// give mu = 0. Throws ConstraintInfeasible when the scores do not straddle
/// zero, and ParameterError on an empty score vector.
MultiplierSolution solve_multiplier(const Eigen::Ref<const Eigen::VectorXd>& scores);

/// w_i = 1 / (N (1 + mu A_i)).
Eigen::VectorXd mele_weights(const MultiplierSolution& sol, const Eigen::Ref<const Eigen::VectorXd>& scores);

/// Maximum empirical likelihood spectral probability measure: the selected
/// angles reweighted so that the angular score has mean zero.
DiscreteSpectralMeasure mele_spectral_prob(const AngularSample& ang);

/// Variant that also hands back the multiplier.
DiscreteSpectralMeasure mele_spectral_prob(const AngularSample& ang, MultiplierSolution& solution);

/// m(Q) = sum_j w_j cos(theta_j) / ||(sin theta_j, cos theta_j)||_p. The sine
/// form must agree within 1e-9, otherwise ConsistencyError.
double spectral_normalizer(const DiscreteSpectralMeasure& q);

/// Q / m(Q): a spectral measure satisfying both moment constraints.
DiscreteSpectralMeasure mele_spectral_measure(const AngularSample& ang);
DiscreteSpectralMeasure mele_spectral_measure(const AngularSample& ang, MultiplierSolution& solution);

}  // namespace specmeasure
