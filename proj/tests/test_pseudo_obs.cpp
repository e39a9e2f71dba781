#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "oracles.hpp"
#include "specmeasure/errors.hpp"
#include "specmeasure/pseudo_obs.hpp"
#include "specmeasure/random.hpp"

using namespace specmeasure;

TEST_CASE("hand-computed ranks and pseudo-observations") {
    BivariateSample x(3, 2);
    x << 10, 5, 20, 7, 30, 6;
    const auto pobs = pseudo_observations(x);
    CHECK(pobs.ranks(0, 0) == 1);
    CHECK(pobs.ranks(1, 0) == 2);
    CHECK(pobs.ranks(2, 0) == 3);
    CHECK(pobs.u(0, 0) == 1.0);
    CHECK(pobs.u(1, 0) == 2.0 / 3.0);
    CHECK(pobs.u(2, 0) == 1.0 / 3.0);
    CHECK(pobs.u(1, 1) == 1.0 / 3.0);
    CHECK_FALSE(pobs.ties);
}

TEST_CASE("single observation") {
    BivariateSample x(1, 2);
    x << 3.5, -2.0;
    const auto pobs = pseudo_observations(x);
    CHECK(pobs.u(0, 0) == 1.0);
    CHECK(pobs.u(0, 1) == 1.0);
}

TEST_CASE("non-finite input names row and column") {
    BivariateSample x(3, 2);
    x << 1, 2, 3, std::numeric_limits<double>::quiet_NaN(), 5, 6;
    try {
        pseudo_observations(x);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("row 2, column 2") != std::string::npos);
    }
    CHECK_THROWS_AS(pseudo_observations(BivariateSample(0, 2)), InputError);
}

TEST_CASE("sort-based ranks equal the counting definition, with and without ties") {
    RandomStream rng = make_stream(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial * 7;
        BivariateSample x(n, 2);
        for (Eigen::Index i = 0; i < n; ++i) {
            x(i, 0) = standard_normal(rng);
            // second column heavily tied
            x(i, 1) = std::floor(4.0 * open_uniform(rng));
        }
        const auto pobs = pseudo_observations(x);
        CHECK(pobs.ranks == oracle::count_ranks(x));
        CHECK(pobs.ties == (n > 4));
        const auto tie_free = pobs.u.col(0).sum();
        CHECK(tie_free == doctest::Approx((n + 1) / 2.0).epsilon(1e-12));
    }
}

TEST_CASE("ranks are invariant under strictly increasing transforms") {
    RandomStream rng = make_stream(3);
    BivariateSample x(200, 2);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        x(i, 0) = standard_normal(rng);
        x(i, 1) = standard_exponential(rng);
    }
    BivariateSample y(x.rows(), 2);
    y.col(0) = x.col(0).array().exp();
    y.col(1) = 3.0 * x.col(1).array().cube() + 7.0;
    const auto a = pseudo_observations(x);
    const auto b = pseudo_observations(y);
    CHECK(a.ranks == b.ranks);
    CHECK((a.u.array() == b.u.array()).all());
    // tie-free columns are permutations of {1/n, ..., 1}
    Eigen::VectorXd sorted = a.u.col(0);
    std::sort(sorted.begin(), sorted.end());
    for (Eigen::Index i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == (i + 1) / 200.0);
}

TEST_CASE("read_sample with header") {
    std::istringstream in("loss,alae\n1500,301.5\n2000,70.2\n");
    const auto s = read_sample(in);
    REQUIRE(s.rows() == 2);
    CHECK(s(0, 0) == 1500.0);
    CHECK(s(1, 1) == 70.2);
}

TEST_CASE("read_sample tolerates blanks and missing header") {
    std::istringstream in(" 1 , 2\n\n3,4 \r\n");
    const auto s = read_sample(in);
    REQUIRE(s.rows() == 2);
    CHECK(s(1, 0) == 3.0);
}

TEST_CASE("read_sample reports the offending line") {
    std::istringstream in("a,b\n1,2\n3,4\n5,6\n7,8,9\n");
    try {
        read_sample(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
    }
    std::istringstream bad("1,2\n3,x\n");
    CHECK_THROWS_AS(read_sample(bad), ParseError);
    std::istringstream header_only("loss,alae\n");
    CHECK_THROWS_AS(read_sample(header_only), InputError);
    CHECK_THROWS_AS(read_sample(std::string("/nonexistent/file.csv")), IoError);
}

TEST_CASE("written samples parse back exactly") {
    RandomStream rng = make_stream(5);
    BivariateSample x(50, 2);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        x(i, 0) = standard_normal(rng) * 1e-7;
        x(i, 1) = 1.0 / open_uniform(rng);
    }
    std::stringstream buf;
    write_sample(buf, x);
    const auto back = read_sample(buf);
    CHECK((back.array() == x.array()).all());
}
