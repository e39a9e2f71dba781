#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "specmeasure/errors.hpp"
#include "specmeasure/mele.hpp"
#include "specmeasure/models.hpp"
#include "specmeasure/pickands.hpp"
#include "specmeasure/random.hpp"

using namespace specmeasure;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const double x : xs) v[i++] = x;
    return v;
}

PickandsFunction from_phi(const DiscreteSpectralMeasure& phi) { return pickands_function(spectral_to_H(phi)); }

}  // namespace

TEST_CASE("complete dependence") {
    const auto a = from_phi(DiscreteSpectralMeasure(vec({kQuarterPi}), vec({2.0}), NormOrder(1.0)));
    for (double v = 0.0; v <= 1.0; v += 0.05) CHECK(a(v) == doctest::Approx(std::max(v, 1.0 - v)).epsilon(1e-14));
}

TEST_CASE("independence") {
    const auto a = from_phi(DiscreteSpectralMeasure(vec({0.0, kHalfPi}), vec({1.0, 1.0}), NormOrder(1.0)));
    for (double v = 0.0; v <= 1.0; v += 0.05) CHECK(a(v) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("angle maps to the H scale") {
    const auto h = spectral_to_H(DiscreteSpectralMeasure(vec({std::atan(3.0), kQuarterPi}), vec({1.0, 0.5}), NormOrder(1.0)));
    REQUIRE(h.size() == 2);
    CHECK(h.locations()[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(h.locations()[1] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(h.weights()[1] == 1.0);
    CHECK_THROWS_AS(spectral_to_H(DiscreteSpectralMeasure(vec({0.5}), vec({1.0}), NormOrder(2.0))), ParameterError);
}

TEST_CASE("MELE Pickands function is a genuine dependence function") {
    RandomStream rng = make_stream(12);
    const auto pobs = pseudo_observations(logistic_model(2.0, NormOrder(1.0)).sample(2000, rng));
    const auto ang = select_extremes(pobs, 80, NormOrder(1.0));
    const auto phi = mele_spectral_measure(ang);
    const auto h = spectral_to_H(phi);
    const auto a = pickands_function(h);
    CHECK(a(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i <= 1000; ++i) {
        const double v = i / 1000.0;
        CHECK(a(v) >= std::max(v, 1.0 - v) - 1e-12);
        CHECK(a(v) <= 1.0 + 1e-12);
        CHECK(a(v) == doctest::Approx(oracle::pickands_max_kernel(h.locations(), h.weights(), v)).epsilon(1e-12));
    }
    const auto s = a.slopes();
    for (Eigen::Index j = 1; j < s.size(); ++j) CHECK(s[j] >= s[j - 1] - 1e-12);
    CHECK(s[0] >= -1.0 - 1e-12);
    CHECK(s[s.size() - 1] <= 1.0 + 1e-12);

    // The empirical estimator ignores the moment constraints, so A(1) drifts off 1.
    const auto emp = pickands_function(spectral_to_H(empirical_spectral_measure(ang)));
    CHECK(emp(1.0) != doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("knot validation") {
    CHECK_THROWS(PickandsFunction(vec({0.1, 1.0}), vec({1.0, 1.0})));
    CHECK_THROWS(PickandsFunction(vec({0.0, 0.5}), vec({1.0, 1.0})));
    CHECK_THROWS(PickandsFunction(vec({0.0, 1.0}), vec({1.0})));
    const PickandsFunction a(vec({0.0, 0.5, 1.0}), vec({1.0, 0.5, 1.0}));
    CHECK(a(0.25) == doctest::Approx(0.75));
    CHECK(a(-1.0) == 1.0);
    CHECK(a(2.0) == 1.0);
}
