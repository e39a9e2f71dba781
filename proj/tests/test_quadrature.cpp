#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "specmeasure/quadrature.hpp"

using namespace specmeasure;

TEST_CASE("Gauss-Legendre nodes and weights") {
    const auto rule = quad::gauss_legendre(2);
    CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(rule.weights.sum() == doctest::Approx(2.0).epsilon(1e-14));

    // n points integrate degree 2n - 1 exactly
    for (int n : {3, 8, 10}) {
        const auto r = quad::gauss_legendre(n);
        for (int d = 0; d <= 2 * n - 1; ++d) {
            const double exact = (std::pow(2.0, d + 1) - std::pow(-1.0, d + 1)) / (d + 1);
            CHECK(quad::integrate(r, [&](double x) { return std::pow(x, d); }, -1.0, 2.0) ==
                  doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    CHECK(quad::tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(quad::tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(quad::tanh_sinh([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0) == doctest::Approx(10.0).epsilon(1e-10));
    // Near a nonzero endpoint the integrand only sees rounded abscissae, which
    // caps the attainable accuracy for strong singularities there.
    CHECK(quad::tanh_sinh([](double x) { return 1.0 / std::sqrt((1.0 - x) * (1.0 + x)); }, -1.0, 1.0) ==
          doctest::Approx(oracle::kPi).epsilon(1e-7));
    CHECK(quad::tanh_sinh([](double x) { return std::sin(x); }, 0.0, oracle::kPi) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("adaptive Simpson") {
    CHECK(quad::adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-11));
    CHECK(quad::adaptive_simpson([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-10));
}
