#include <doctest.h>

#include <cmath>
#include <vector>

#include "liouwave/error.hpp"
#include "liouwave/profile.hpp"
#include "oracles.hpp"

using namespace liouwave;

TEST_CASE("bump profile")
{
    const auto f = InitialProfile::bump(-1.0, 3.0);
    CHECK(f.support().lo == -1.0);
    CHECK(f.support().hi == 3.0);
    CHECK(f(1.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(f(-1.0) == 0.0);
    CHECK(f(3.0) == 0.0);
    CHECK(f(-5.0) == 0.0);
    CHECK(f(2.999999) >= 0.0);
    for (double x = -1.5; x <= 3.5; x += 0.0137) {
        CHECK(f(x) == doctest::Approx(oracle::bump(-1.0, 3.0, x)).epsilon(1e-15));
    }
    CHECK(f.scaled(2.5)(0.3) == doctest::Approx(2.5 * f(0.3)));
    CHECK_THROWS_AS(InitialProfile::bump(1.0, 1.0), DomainError);
    CHECK(f.describe() == "bump:-1:3");
}

TEST_CASE("sampled profile interpolates and keeps compact support")
{
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i <= 80; ++i) {
        x.push_back(-2.0 + 0.05 * i);
        y.push_back(oracle::bump(-1.0, 1.0, x.back()));
    }
    const auto f = InitialProfile::sampled(x, y);
    CHECK(f.support().lo == doctest::Approx(-1.0));
    CHECK(f.support().hi == doctest::Approx(1.0));
    CHECK(f(-1.2) == 0.0);
    CHECK(f(1.5) == 0.0);
    for (int i = 0; i <= 80; ++i) {
        CHECK(f(x[i]) == doctest::Approx(y[i]).epsilon(1e-14));
    }
    // Cubic spline error on a 0.05 grid.
    for (double t = -0.9; t <= 0.9; t += 0.013) {
        CHECK(std::fabs(f(t) - oracle::bump(-1.0, 1.0, t)) <= 2e-4);
    }
}

TEST_CASE("sampled profile validation")
{
    CHECK_THROWS_AS(InitialProfile::sampled({0.0, 1.0, 2.0}, {0.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(InitialProfile::sampled({0.0, 1.0, 2.0}, {1.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(InitialProfile::sampled({0.0, 1.0, 2.0}, {0.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(InitialProfile::sampled({0.0, 0.0, 2.0}, {0.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(InitialProfile::sampled({0.0, 1.0}, {0.0, 0.0}), DomainError);
    CHECK_NOTHROW(InitialProfile::sampled({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}));
}

TEST_CASE("function profile is clipped to its support")
{
    const auto f = InitialProfile::function([](double x) { return x * x; }, 0.0, 2.0, "square");
    CHECK(f(1.5) == 2.25);
    CHECK(f(2.5) == 0.0);
    CHECK(f(-0.5) == 0.0);
    CHECK(f.describe() == "square");
}
