#include "specmeasure/mele.hpp"

#include <cmath>
#include <string>

#include "specmeasure/errors.hpp"

namespace specmeasure {

namespace {

constexpr double kResidualTolerance = 1e-12;
constexpr double kStepTolerance = 1e-14;
constexpr int kMaxIterations = 500;

}  // namespace

double psi(double mu, const Eigen::Ref<const Eigen::VectorXd>& scores) {
    double acc = 0.0;
    for (const double a : scores) {
        const double denom = 1.0 + mu * a;
        if (!(denom > 0.0)) throw DomainError("psi evaluated outside its domain: 1 + mu * A <= 0");
        acc += a / denom;
    }
    return acc / static_cast<double>(scores.size());
}

double psi_derivative(double mu, const Eigen::Ref<const Eigen::VectorXd>& scores) {
    double acc = 0.0;
    for (const double a : scores) {
        const double t = a / (1.0 + mu * a);
        acc += t * t;
    }
    return -acc / static_cast<double>(scores.size());
}

MultiplierSolution solve_multiplier(const Eigen::Ref<const Eigen::VectorXd>& scores) {
    if (scores.size() == 0) throw ParameterError("no angular scores");
    MultiplierSolution sol;
    const double lo_score = scores.minCoeff();
    const double hi_score = scores.maxCoeff();
    if (lo_score == 0.0 && hi_score == 0.0) return sol;
    if (!(lo_score < 0.0 && hi_score > 0.0))
        throw ConstraintInfeasible("all angular scores lie on one side of zero (every selected angle is on the same side of pi/4); "
                                   "no positive weights satisfy the moment constraint");

    sol.lower = -1.0 / hi_score;
    sol.upper = -1.0 / lo_score;

    // psi decreases from +inf at `lower` to -inf at `upper`.
    double left = sol.lower;
    double right = sol.upper;
    const double first_order = scores.sum() / scores.squaredNorm();
    double x = (first_order > left && first_order < right) ? first_order : 0.0;

    for (int it = 1; it <= kMaxIterations; ++it) {
        sol.iterations = it;
        const double value = psi(x, scores);
        if (value == 0.0) break;
        if (value > 0.0)
            left = x;
        else
            right = x;

        const double slope = psi_derivative(x, scores);
        const double newton = x - value / slope;
        const bool newton_ok = std::isfinite(newton) && newton > left && newton < right;
        const double next = newton_ok ? newton : 0.5 * (left + right);
        const double scale = kStepTolerance * (1.0 + std::abs(x));
        const bool small_step = std::abs(next - x) <= scale || (right - left) <= scale;
        if (std::abs(value) <= kResidualTolerance && small_step) break;
        if (next == x) break;
        x = next;
    }
    sol.mu = x;
    sol.residual = std::abs(psi(x, scores));
    if (!(sol.residual <= 1e-10))
        throw ConsistencyError("multiplier search did not converge (residual " + std::to_string(sol.residual) + ")");
    return sol;
}

Eigen::VectorXd mele_weights(const MultiplierSolution& sol, const Eigen::Ref<const Eigen::VectorXd>& scores) {
    const double n = static_cast<double>(scores.size());
    return (n * (1.0 + sol.mu * scores.array())).inverse().matrix();
}

DiscreteSpectralMeasure mele_spectral_prob(const AngularSample& ang, MultiplierSolution& solution) {
    solution = solve_multiplier(ang.scores);
    return DiscreteSpectralMeasure(ang.angles, mele_weights(solution, ang.scores), ang.p);
}

DiscreteSpectralMeasure mele_spectral_prob(const AngularSample& ang) {
    MultiplierSolution unused;
    return mele_spectral_prob(ang, unused);
}

double spectral_normalizer(const DiscreteSpectralMeasure& q) {
    const MomentSums m = moment_sums(q);
    if (!(std::abs(m.sine - m.cosine) <= 1e-9))
        throw ConsistencyError("moment constraint violated: sine and cosine sums differ by " +
                               std::to_string(m.sine - m.cosine));
    if (!(m.cosine > 0.0)) throw ConsistencyError("nonpositive normalizing constant");
    return m.cosine;
}

DiscreteSpectralMeasure mele_spectral_measure(const AngularSample& ang, MultiplierSolution& solution) {
    const DiscreteSpectralMeasure q = mele_spectral_prob(ang, solution);
    return q.scaled(1.0 / spectral_normalizer(q));
}

DiscreteSpectralMeasure mele_spectral_measure(const AngularSample& ang) {
    MultiplierSolution unused;
    return mele_spectral_measure(ang, unused);
}

}  // namespace specmeasure
