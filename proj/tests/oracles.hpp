// Independent reference computations used only by the test suites. Nothing
// here calls into the library's evaluation paths.
#ifndef LIOUWAVE_TESTS_ORACLES_HPP
#define LIOUWAVE_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

/// Truncated ascending series sum_{m<terms} (-x^2/4)^m / (m!)^2.
inline double j0_series(double x, int terms = 60)
{
    const double q = x * x / 4.0;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < terms; ++m) {
        term *= -q / (static_cast<double>(m) * m);
        sum += term;
    }
    return sum;
}

/// Y0 = (2/pi) [(ln(x/2) + gamma) J0(x) + sum_{m>=1} (-1)^{m+1} H_m (x^2/4)^m / (m!)^2].
inline double y0_series(double x, int terms = 60)
{
    constexpr double gamma = 0.5772156649015328606;
    const double q = x * x / 4.0;
    double term = 1.0;
    double h = 0.0;
    double sum = 0.0;
    for (int m = 1; m < terms; ++m) {
        term *= q / (static_cast<double>(m) * m);
        h += 1.0 / m;
        sum += (m % 2 == 1 ? 1.0 : -1.0) * h * term;
    }
    return 2.0 / std::numbers::pi * ((std::log(x / 2.0) + gamma) * j0_series(x, terms) + sum);
}

/// sum (x^2/4)^m / (m!)^2
inline double i0_series(double x, int terms = 80)
{
    const double q = x * x / 4.0;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < terms; ++m) {
        term *= q / (static_cast<double>(m) * m);
        sum += term;
    }
    return sum;
}

/// Bisection for a sign change of fn on [lo, hi].
inline double bisect(const std::function<double(double)>& fn, double lo, double hi)
{
    double flo = fn(lo);
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) {
            break;
        }
        const double fm = fn(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Eq. for Z written with the literal cosh difference, in long double.
inline long double kernel_z(long double t, long double X, long double Xp, long double k)
{
    const long double r = 2.0L * std::exp(X + Xp) * (std::cosh(t) - std::cosh(X - Xp));
    return std::fabs(k) * std::sqrt(r > 0.0L ? r : 0.0L);
}

/// High-accuracy double-exponential quadrature of fn over [a, b].
inline double integrate(const std::function<double(double)>& fn, double a, double b)
{
    if (!(b > a)) {
        return 0.0;
    }
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(fn, a, b);
}

/// d'Alembert value 1/2 * integral_{X-t}^{X+t} f over the support [a, b].
inline double dalembert(const std::function<double(double)>& f, double a, double b, double t, double X)
{
    return 0.5 * integrate(f, std::max(a, X - t), std::min(b, X + t));
}

/// exp(-1/(1 - s^2)), s = (2X - a - b)/(b - a), written out independently.
inline double bump(double a, double b, double X)
{
    if (X <= a || X >= b) {
        return 0.0;
    }
    const double s = (2.0 * X - a - b) / (b - a);
    return std::exp(-1.0 / (1.0 - s * s));
}

} // namespace oracle

#endif
