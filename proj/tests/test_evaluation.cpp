#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "specmeasure/errors.hpp"
#include "specmeasure/evaluation.hpp"

using namespace specmeasure;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const double x : xs) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("ISE of a tail-independence truth against shifted steps") {
    // Truth: unit atoms at both ends, cdf 1 on [0, pi/2).
    const auto truth = asym_logistic_model(1.0, 1.0, 1.0, NormOrder(1.0));
    const DiscreteSpectralMeasure exact(vec({0.0, kHalfPi}), vec({1.0, 1.0}), NormOrder(1.0));
    CHECK(integrated_squared_error(exact, truth, 0.0, kHalfPi) == 0.0);
    const DiscreteSpectralMeasure low(vec({0.0, kHalfPi}), vec({0.7, 1.3}), NormOrder(1.0));
    CHECK(integrated_squared_error(low, truth, 0.2, 1.1) == doctest::Approx(0.09 * 0.9).epsilon(1e-14));
}

TEST_CASE("ISE of the Cauchy truth against a Riemann oracle") {
    const auto truth = cauchy_quadrant_model(NormOrder(1.0));
    const DiscreteSpectralMeasure far(vec({kHalfPi}), vec({1e-300}), NormOrder(1.0));
    const auto zero_gap = [](double t) {
        const double f = 1.0 - std::cos(t) + std::sin(t);
        return f * f;
    };
    CHECK(integrated_squared_error(far, truth, 0.0, kHalfPi) == doctest::Approx(oracle::kPi - 1.0).epsilon(1e-12));
    CHECK(oracle::riemann(zero_gap, 0.0, kHalfPi, 1000000) == doctest::Approx(oracle::kPi - 1.0).epsilon(1e-10));

    const DiscreteSpectralMeasure est(vec({0.3, 0.9, 1.2}), vec({0.5, 1.0, 0.5}), NormOrder(1.0));
    const auto gap = [&](double t) {
        const double d = est.cdf(t) - truth.cdf(t);
        return d * d;
    };
    const double breaks[] = {0.1, 0.3, 0.9, 1.2, 1.5};
    double ref = 0.0;
    for (int j = 0; j < 4; ++j) ref += oracle::riemann(gap, breaks[j], breaks[j + 1], 250000);
    CHECK(integrated_squared_error(est, truth, 0.1, 1.5) == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("ISE argument checks") {
    const auto truth = cauchy_quadrant_model(NormOrder(1.0));
    const DiscreteSpectralMeasure est(vec({0.3}), vec({1.0}), NormOrder(2.0));
    CHECK_THROWS_AS(integrated_squared_error(est, truth, 0.0, kHalfPi), ParameterError);
    const DiscreteSpectralMeasure ok(vec({0.3}), vec({1.0}), NormOrder(1.0));
    CHECK_THROWS_AS(integrated_squared_error(ok, truth, 0.5, 0.4), ParameterError);
    CHECK_THROWS_AS(integrated_squared_error(ok, truth, 0.0, 2.0), ParameterError);
}

TEST_CASE("MISE sweep is deterministic across thread counts") {
    const auto model = logistic_model(2.0, NormOrder::infinity());
    MiseConfig config;
    config.n = 300;
    config.replications = 12;
    config.k_grid = {10, 30, 60};
    config.seed = 77;
    config.threads = 1;
    const auto serial = mise_sweep(model, config);
    config.threads = 4;
    const auto parallel = mise_sweep(model, config);
    REQUIRE(serial.cells.size() == 6);
    for (std::size_t i = 0; i < serial.cells.size(); ++i) {
        CHECK(serial.cells[i].mise == parallel.cells[i].mise);
        CHECK(serial.cells[i].standard_error == parallel.cells[i].standard_error);
        CHECK(serial.cells[i].mise > 0.0);
    }
    CHECK(serial.cell(30, Estimator::Mele).k == 30);
    CHECK(serial.model == "logistic(r=2,psi1=1,psi2=1,p=inf)");
}

TEST_CASE("single replication has zero standard error") {
    MiseConfig config;
    config.n = 200;
    config.replications = 1;
    config.k_grid = {20};
    const auto t = mise_sweep(cauchy_quadrant_model(NormOrder(1.0)), config);
    CHECK(t.cells[0].standard_error == 0.0);
    CHECK(t.cells[1].standard_error == 0.0);
}

TEST_CASE("MISE configuration checks and defaults") {
    const auto model = mixture_model(0.5, NormOrder(1.0));
    const auto [a, b] = default_interval(model);
    CHECK(a == doctest::Approx(0.05 * kHalfPi));
    CHECK(b == doctest::Approx(0.95 * kHalfPi));
    CHECK(default_interval(logistic_model(2.0, NormOrder(1.0))).second == kHalfPi);
    CHECK(default_k_grid().size() == 20);
    MiseConfig config;
    config.n = 50;
    config.replications = 2;
    CHECK_THROWS_AS(mise_sweep(model, config), ParameterError);  // default grid exceeds n
    CHECK_THROWS_AS(mise_sweep(asym_logistic_model(2.0, 1.0, 0.5, NormOrder(1.0)), config), UnsupportedOperation);
}

TEST_CASE("MISE table round trip") {
    MiseConfig config;
    config.n = 200;
    config.replications = 3;
    config.k_grid = {10, 40};
    config.seed = 5;
    const auto t = mise_sweep(mixture_model(0.5, NormOrder(2.0)), config);
    std::stringstream ss;
    write_mise_table(ss, t);
    const auto back = read_mise_table(ss);
    REQUIRE(back.size() == t.cells.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].k == t.cells[i].k);
        CHECK(back[i].estimator == t.cells[i].estimator);
        CHECK(back[i].mise == t.cells[i].mise);
        CHECK(back[i].standard_error == t.cells[i].standard_error);
        CHECK(back[i].infeasible_count == t.cells[i].infeasible_count);
    }
    std::istringstream bad("k,estimator,mise,stderr,infeasible_count\n10,bogus,1,1,0\n");
    CHECK_THROWS_AS(read_mise_table(bad), ParseError);
}
