#ifndef LIOUWAVE_QUADRATURE_HPP
#define LIOUWAVE_QUADRATURE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace liouwave {

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree <= 2n-1.
class QuadratureRule {
public:
    /// Throws ConfigError for order < 1.
    explicit QuadratureRule(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    /// Integral over [a, b] split into `panels` equal sub-intervals.
    /// Summation order is fixed: panel by panel, node by node.
    template <class F>
    double integrate(F&& fn, double a, double b, int panels = 1) const
    {
        if (!(b > a) || panels < 1) {
            return 0.0;
        }
        const double width = (b - a) / panels;
        const double half = 0.5 * width;
        double total = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double mid = a + (p + 0.5) * width;
            double acc = 0.0;
            for (std::size_t i = 0; i < nodes_.size(); ++i) {
                acc += weights_[i] * fn(mid + half * nodes_[i]);
            }
            total += half * acc;
        }
        return total;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Gauss-Legendre rule repeated over equal panels. Defaults: order 16, 8 panels.
class CompositeRule {
public:
    /// Throws ConfigError for order < 1 or panels < 1.
    explicit CompositeRule(int order = 16, int panels = 8);

    const QuadratureRule& rule() const { return rule_; }
    int order() const { return rule_.order(); }
    int panels() const { return panels_; }

    template <class F>
    double integrate(F&& fn, double a, double b) const
    {
        return rule_.integrate(std::forward<F>(fn), a, b, panels_);
    }

private:
    QuadratureRule rule_;
    int panels_;
};

} // namespace liouwave

#endif
