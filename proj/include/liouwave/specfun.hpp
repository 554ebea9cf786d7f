#ifndef LIOUWAVE_SPECFUN_HPP
#define LIOUWAVE_SPECFUN_HPP

namespace liouwave::specfun {

/// Published accuracy of an evaluation routine on a stated interval.
struct EvalAccuracy {
    double abs_tol;
    double rel_tol;
    double domain_lo;
    double domain_hi;
};

/// J0 is accurate to 1e-13 absolute on [0, 50].
inline constexpr EvalAccuracy kJ0Accuracy{1e-13, 1e-12, 0.0, 50.0};
/// Y0 is accurate to 1e-12 absolute on (1e-8, 50].
inline constexpr EvalAccuracy kY0Accuracy{1e-12, 1e-11, 1e-8, 50.0};

/// Below this magnitude the ascending series is used, above it the
/// Hankel asymptotic expansion.
inline constexpr double kSeriesCrossover = 17.0;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Bessel function of the first kind, order zero. Even in x; J0(0) == 1.
/// Throws DomainError for non-finite x.
double bessel_j0(double x);

/// Bessel function of the second kind, order zero. Requires x > 0.
/// Throws DomainError for x <= 0 or non-finite x.
double bessel_y0(double x);

/// Modified Bessel function of the first kind, order zero: I0(x) = J0(ix).
/// Even in x, positive. Throws DomainError for non-finite x.
double bessel_i0(double x);

/// Inverse hyperbolic sine, odd and stable for large |x|.
double asinh(double x);

} // namespace liouwave::specfun

#endif
