#include "liouwave/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "liouwave/error.hpp"
#include "liouwave/parallel.hpp"
#include "liouwave/specfun.hpp"

namespace liouwave {

namespace detail {

void require_solver_inputs(double t, double X, const CompositeRule& quad, const char* fn)
{
    if (!std::isfinite(t) || !std::isfinite(X)) {
        throw DomainError(std::string(fn) + ": non-finite input");
    }
    if (!(t > 0.0)) {
        throw DomainError(std::string(fn) + ": t must be > 0");
    }
    if (quad.order() < kMinSolverOrder) {
        throw ConfigError(std::string(fn) + ": quadrature order must be >= " + std::to_string(kMinSolverOrder));
    }
}

} // namespace detail

double solve_cauchy(const PotentialParams& params, const InitialProfile& f, double t, double X,
                    const CompositeRule& quad)
{
    detail::require_solver_inputs(t, X, quad, "solve_cauchy");
    const double lo = std::max(X - t, f.support().lo);
    const double hi = std::min(X + t, f.support().hi);
    if (!(hi > lo)) {
        return 0.0;
    }
    const auto integrand = [&](double Xp) {
        const double Z = kernel_argument({t, X, Xp}, params).Z;
        return specfun::bessel_j0(Z) * f(Xp);
    };
    return 0.5 * quad.integrate(integrand, lo, hi);
}

double solve_cauchy_regularized(const PotentialParams& params, const InitialProfile& f, double t, double X,
                                const CompositeRule& quad)
{
    detail::require_solver_inputs(t, X, quad, "solve_cauchy_regularized");
    const double s = std::sinh(0.5 * t);
    const double two_k_s = 2.0 * std::fabs(params.k) * s;
    const double a = f.support().lo;
    const double b = f.support().hi;

    double total = 0.0;
    for (const double sign : {1.0, -1.0}) {
        // z-range on which X' = X + sign * 2 asinh(z s) stays inside [a, b].
        double zlo = sign > 0 ? std::sinh(0.5 * (a - X)) / s : std::sinh(0.5 * (X - b)) / s;
        double zhi = sign > 0 ? std::sinh(0.5 * (b - X)) / s : std::sinh(0.5 * (X - a)) / s;
        zlo = std::max(zlo, 0.0);
        zhi = std::min(zhi, 1.0);
        if (!(zhi > zlo)) {
            continue;
        }
        const auto integrand = [&](double z) {
            const double Xp = X + sign * 2.0 * specfun::asinh(z * s);
            const double one_minus_z2 = (1.0 - z) * (1.0 + z);
            const double arg = two_k_s * std::sqrt(std::exp(X + Xp) * one_minus_z2);
            return specfun::bessel_j0(arg) * f(Xp) * s / std::sqrt(1.0 + z * z * s * s);
        };
        total += quad.integrate(integrand, zlo, zhi);
    }
    return total;
}

double small_time_slope(const PotentialParams& params, const InitialProfile& f, double X, double t,
                        const CompositeRule& quad)
{
    if (!(t > 0.0) || t > 0.1) {
        throw DomainError("small_time_slope: t must lie in (0, 0.1]");
    }
    return solve_cauchy_regularized(params, f, t, X, quad) / t;
}

SolutionField solve_cauchy_field(const PotentialParams& params, const InitialProfile& f,
                                 const std::vector<double>& times, const std::vector<double>& positions,
                                 const CompositeRule& quad, PropagatorForm form)
{
    SolutionField field(times, positions,
                        form == PropagatorForm::raw ? Provenance::quadrature : Provenance::regularized);
    const std::size_t nx = positions.size();
    parallel_for(times.size() * nx, [&](std::size_t idx) {
        const double t = times[idx / nx];
        const double X = positions[idx % nx];
        if (t == 0.0) {
            field.values[idx] = 0.0;
            return;
        }
        field.values[idx] = form == PropagatorForm::raw ? solve_cauchy(params, f, t, X, quad)
                                                        : solve_cauchy_regularized(params, f, t, X, quad);
    });
    return field;
}

} // namespace liouwave
