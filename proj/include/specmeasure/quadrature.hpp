#pragma once

#include <Eigen/Core>

#include <functional>

namespace specmeasure::quad {

using Integrand = std::function<double(double)>;

/// Adaptive Simpson with Richardson correction; stops when the local error
/// estimate is below `tol` (absolute) or at `max_depth`.
double adaptive_simpson(const Integrand& f, double a, double b, double tol = 1e-9, int max_depth = 50);

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// n-point rule, nodes and weights from the Jacobi matrix eigenproblem.
GaussRule gauss_legendre(int n);

/// Applies `rule` on [a, b].
template <typename Fn>
double integrate(const GaussRule& rule, Fn&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

/// Double-exponential (tanh-sinh) quadrature. Never evaluates f at a or b,
/// so integrable endpoint singularities are fine. Refines the step until
/// successive levels agree to `tol` (absolute).
double tanh_sinh(const Integrand& f, double a, double b, double tol = 1e-12);

}  // namespace specmeasure::quad
