#include "specmeasure/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "specmeasure/errors.hpp"

namespace specmeasure::quad {

namespace {

double simpson_step(const Integrand& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

constexpr double kHalfPiConst = 1.57079632679489661923;
constexpr double kTanhSinhSpan = 6.0;  // complement 1 - tanh(pi/2 sinh 6) ~ 1e-275
constexpr int kTanhSinhMaxLevel = 10;

}  // namespace

double adaptive_simpson(const Integrand& f, double a, double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw ParameterError("Gauss rule needs at least one node");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double beta = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k, k - 1) = beta;
        jacobi(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi);
    GaussRule rule;
    rule.nodes = eig.eigenvalues();
    rule.weights = 2.0 * eig.eigenvectors().row(0).transpose().array().square();
    return rule;
}

double tanh_sinh(const Integrand& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    // Contribution of abscissa t > 0 (both mirror points), weight included.
    auto pair_term = [&](double t) {
        const double s = kHalfPiConst * std::sinh(t);
        const double e = std::exp(-2.0 * s);
        const double complement = 2.0 * e / (1.0 + e);  // 1 - tanh(s)
        const double weight = kHalfPiConst * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        const double offset = half * complement;
        if (weight == 0.0 || offset == 0.0) return 0.0;
        const double lo = a + offset;
        const double hi = b - offset;
        double acc = 0.0;
        if (lo > a && lo < b) acc += f(lo);
        if (hi > a && hi < b) acc += f(hi);
        return weight * acc;
    };

    double h = 1.0;
    double sum = kHalfPiConst * f(mid);
    for (double t = h; t <= kTanhSinhSpan; t += h) sum += pair_term(t);
    double estimate = half * h * sum;

    for (int level = 1; level <= kTanhSinhMaxLevel; ++level) {
        h *= 0.5;
        for (double t = h; t <= kTanhSinhSpan; t += 2.0 * h) sum += pair_term(t);
        const double refined = half * h * sum;
        const double change = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 3 && change <= tol) break;
    }
    return estimate;
}

}  // namespace specmeasure::quad
