#include "specmeasure/empirical.hpp"

#include <cmath>
#include <vector>

#include "specmeasure/errors.hpp"

namespace specmeasure {

namespace {

using Wide = unsigned __int128;

// a^{-p} + b^{-p} >= k^{-p} for reversed ranks a, b >= 1.
bool in_extreme_region(std::int64_t a, std::int64_t b, std::int64_t k, double n, const NormOrder& p) {
    if (p.is_infinite()) return std::min(a, b) <= k;
    if (p.is_one()) return Wide(k) * Wide(a + b) >= Wide(a) * Wide(b);
    if (p.value() == 2.0) {
        const Wide a2 = Wide(a) * Wide(a);
        const Wide b2 = Wide(b) * Wide(b);
        return Wide(k) * Wide(k) * (a2 + b2) >= a2 * b2;
    }
    return lp_norm(n / static_cast<double>(a), n / static_cast<double>(b), p) >= n / static_cast<double>(k);
}

}  // namespace

AngularSample select_extremes(const PseudoObservations& pobs, Eigen::Index k, const NormOrder& p) {
    const Eigen::Index n = pobs.size();
    if (k < 1 || k > n)
        throw ParameterError("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");

    std::vector<Eigen::Index> members;
    for (Eigen::Index i = 0; i < n; ++i)
        if (in_extreme_region(pobs.reversed_rank(i, 0), pobs.reversed_rank(i, 1), k, double(n), p))
            members.push_back(i);

    AngularSample out;
    out.n = n;
    out.k = k;
    out.p = p;
    const auto m = static_cast<Eigen::Index>(members.size());
    out.indices.resize(m);
    out.angles.resize(m);
    out.scores.resize(m);
    for (Eigen::Index t = 0; t < m; ++t) {
        const Eigen::Index i = members[static_cast<std::size_t>(t)];
        // u2 / u1 = b / a exactly; both are positive so no quadrant handling.
        const double ratio = static_cast<double>(pobs.reversed_rank(i, 1)) /
                             static_cast<double>(pobs.reversed_rank(i, 0));
        out.indices[t] = i;
        out.angles[t] = std::atan(ratio);
        out.scores[t] = score_f(out.angles[t], p);
    }
    return out;
}

DiscreteSpectralMeasure empirical_spectral_measure(const AngularSample& ang) {
    return DiscreteSpectralMeasure(ang.angles, Eigen::VectorXd::Constant(ang.count(), 1.0 / double(ang.k)), ang.p);
}

DiscreteSpectralMeasure empirical_spectral_prob(const AngularSample& ang) {
    return DiscreteSpectralMeasure(ang.angles, Eigen::VectorXd::Constant(ang.count(), 1.0 / double(ang.count())), ang.p);
}

}  // namespace specmeasure
