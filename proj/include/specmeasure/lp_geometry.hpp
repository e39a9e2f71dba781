#pragma once

// L_p geometry on the positive quadrant: norms, the angular score used by the
// moment constraint, and the boundary curves of the extreme region.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specmeasure/errors.hpp"

namespace specmeasure {

inline constexpr double kHalfPi = 1.57079632679489661923;
inline constexpr double kQuarterPi = 0.785398163397448309616;

/// Order p of an L_p norm, p in [1, inf]. Infinity is a distinct state and
/// is never represented by a large finite exponent.
class NormOrder {
public:
    /// Finite order; throws ParameterError unless p >= 1 and p is finite.
    explicit NormOrder(double p) : p_(p), infinite_(false) {
        if (!(p >= 1.0) || !std::isfinite(p))
            throw ParameterError("norm order must be a finite value >= 1 (use NormOrder::infinity())");
    }

    static NormOrder infinity() { return NormOrder(); }

    /// Accepts "inf" / "infinity" or a decimal number >= 1.
    static NormOrder parse(const std::string& text);

    bool is_infinite() const noexcept { return infinite_; }
    bool is_one() const noexcept { return !infinite_ && p_ == 1.0; }

    /// Finite exponent; undefined for the infinite order.
    double value() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const NormOrder& a, const NormOrder& b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
    }

private:
    NormOrder() : p_(std::numeric_limits<double>::infinity()), infinite_(true) {}

    double p_;
    bool infinite_;
};

/// ||(v1, v2)||_p for nonnegative components.
template <typename Scalar>
Scalar lp_norm(Scalar v1, Scalar v2, const NormOrder& p) {
    using std::abs;
    using std::max;
    using std::pow;
    v1 = abs(v1);
    v2 = abs(v2);
    if (p.is_infinite()) return max(v1, v2);
    if (p.is_one()) return v1 + v2;
    if (p.value() == 2.0) return std::hypot(v1, v2);
    const Scalar big = max(v1, v2);
    if (big == Scalar(0) || std::isinf(big)) return big;
    const Scalar e = Scalar(p.value());
    const Scalar a = v1 / big;
    const Scalar b = v2 / big;
    return big * pow(pow(a, e) + pow(b, e), Scalar(1) / e);
}

/// Angular score f(theta) = (sin - cos) / ||(sin, cos)||_p on [0, pi/2].
/// f(0) = -1, f(pi/2) = 1, strictly increasing.
template <typename Scalar>
Scalar score_f(Scalar theta, const NormOrder& p) {
    using std::cos;
    using std::sin;
    const Scalar s = sin(theta);
    const Scalar c = cos(theta);
    // sin - cos written so that it vanishes exactly at the pi/4 node
    const Scalar diff = std::sqrt(Scalar(2)) * sin(theta - Scalar(kQuarterPi));
    return diff / lp_norm(s, c, p);
}

/// Upper boundary y_p(x) of the region {||(1/x, 1/y)||_p <= 1}: the smallest
/// y in [1, inf] with ||(1/x, 1/y)||_p = 1 when x > 1, infinity when x <= 1
/// for finite p.
template <typename Scalar>
Scalar y_curve(Scalar x, const NormOrder& p) {
    using std::pow;
    constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();
    if (x < Scalar(1)) return inf;
    if (p.is_infinite()) return Scalar(1);
    if (x == Scalar(1)) return inf;
    if (std::isinf(x)) return Scalar(1);
    const Scalar e = Scalar(p.value());
    // x^p - 1 via expm1 keeps precision for x close to 1.
    const Scalar xp_minus_one = std::expm1(e * std::log(x));
    return pow(Scalar(1) + Scalar(1) / xp_minus_one, Scalar(1) / e);
}

/// x_p(theta) = ||(1, cot theta)||_p. x tan(theta) < y_p(x) iff x < x_p(theta).
template <typename Scalar>
Scalar x_boundary(Scalar theta, const NormOrder& p) {
    if (theta == Scalar(0)) return std::numeric_limits<Scalar>::infinity();
    const Scalar cot = std::cos(theta) / std::sin(theta);
    return lp_norm(Scalar(1), cot, p);
}

}  // namespace specmeasure
