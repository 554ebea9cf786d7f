#include "liouwave/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "liouwave/error.hpp"

namespace liouwave {

QuadratureRule::QuadratureRule(int order)
{
    if (order < 1) {
        throw ConfigError("QuadratureRule: order must be >= 1");
    }
    const int n = order;
    nodes_.assign(n, 0.0);
    weights_.assign(n, 0.0);
    // Newton iteration on P_n from Tricomi-style initial guesses; roots are
    // symmetric so only the upper half is computed.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) {
                break;
            }
        }
        // One more derivative evaluation at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes_[i] = -x;
        nodes_[n - 1 - i] = x;
        weights_[i] = w;
        weights_[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        nodes_[n / 2] = 0.0;
    }
}

CompositeRule::CompositeRule(int order, int panels) : rule_(order), panels_(panels)
{
    if (panels < 1) {
        throw ConfigError("CompositeRule: panels must be >= 1");
    }
}

} // namespace liouwave
