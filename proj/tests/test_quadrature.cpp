#include <doctest.h>

#include <cmath>
#include <numeric>

#include "liouwave/error.hpp"
#include "liouwave/quadrature.hpp"

using namespace liouwave;

TEST_CASE("Gauss-Legendre weights sum to 2 and nodes are symmetric")
{
    for (int n = 1; n <= 64; ++n) {
        const QuadratureRule q(n);
        const auto& w = q.weights();
        const double sum = std::accumulate(w.begin(), w.end(), 0.0);
        CAPTURE(n);
        CHECK(std::fabs(sum - 2.0) <= 1e-14);
        for (int i = 0; i < n; ++i) {
            CHECK(q.nodes()[i] == -q.nodes()[n - 1 - i]);
            CHECK(w[i] > 0.0);
            CHECK(std::fabs(q.nodes()[i]) < 1.0);
        }
    }
}

TEST_CASE("Gauss-Legendre is exact to degree 2n-1")
{
    for (int n = 1; n <= 32; ++n) {
        const QuadratureRule q(n);
        for (int deg = 0; deg <= 2 * n - 1; ++deg) {
            const double got = q.integrate([deg](double x) { return std::pow(x, deg); }, -1.0, 1.0);
            const double exact = (deg % 2 == 1) ? 0.0 : 2.0 / (deg + 1);
            CAPTURE(n);
            CAPTURE(deg);
            CHECK(std::fabs(got - exact) <= 1e-13);
        }
    }
}

TEST_CASE("composite rule on a shifted interval")
{
    const CompositeRule rule(8, 5);
    CHECK(rule.integrate([](double x) { return std::exp(x); }, 0.0, 2.0) == doctest::Approx(std::exp(2.0) - 1.0));
    CHECK(rule.integrate([](double) { return 1.0; }, 3.0, 3.0) == 0.0);
    CHECK(rule.integrate([](double) { return 1.0; }, 3.0, 1.0) == 0.0);
    CHECK_THROWS_AS(QuadratureRule(0), ConfigError);
    CHECK_THROWS_AS(CompositeRule(8, 0), ConfigError);
}
