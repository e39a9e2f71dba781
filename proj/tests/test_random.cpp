#include <doctest.h>

#include <cmath>
#include <vector>

#include "specmeasure/random.hpp"

using namespace specmeasure;

TEST_CASE("streams are reproducible and distinct") {
    RandomStream a = make_stream(42, 3);
    RandomStream b = make_stream(42, 3);
    RandomStream c = make_stream(42, 4);
    RandomStream d = make_stream(43, 3);
    bool differs_c = false, differs_d = false;
    for (int i = 0; i < 16; ++i) {
        const auto x = a();
        CHECK(x == b());
        differs_c |= x != c();
        differs_d |= x != d();
    }
    CHECK(differs_c);
    CHECK(differs_d);
}

TEST_CASE("open uniform stays inside (0, 1)") {
    RandomStream rng = make_stream(1);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = open_uniform(rng);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(lo > 0.0);
    CHECK(hi < 1.0);
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("exponential and normal moments") {
    RandomStream rng = make_stream(2);
    const int n = 200000;
    double se = 0.0, sn = 0.0, sn2 = 0.0;
    for (int i = 0; i < n; ++i) {
        se += standard_exponential(rng);
        const double z = standard_normal(rng);
        sn += z;
        sn2 += z * z;
    }
    CHECK(std::abs(se / n - 1.0) < 5.0 / std::sqrt(double(n)));
    CHECK(std::abs(sn / n) < 5.0 / std::sqrt(double(n)));
    CHECK(std::abs(sn2 / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

TEST_CASE("positive stable Laplace transform") {
    RandomStream rng = make_stream(3);
    const int n = 200000;
    for (const double alpha : {0.3, 0.5, 0.8}) {
        std::vector<double> s(n);
        for (auto& x : s) x = positive_stable(alpha, rng);
        for (const double t : {0.25, 1.0, 3.0}) {
            double acc = 0.0;
            for (const double x : s) acc += std::exp(-t * x);
            // e^{-tS} lies in [0, 1]: standard error at most 0.5/sqrt(n)
            CHECK(std::abs(acc / n - std::exp(-std::pow(t, alpha))) < 5.0 * 0.5 / std::sqrt(double(n)));
        }
    }
    CHECK(positive_stable(1.0, rng) == 1.0);
}
