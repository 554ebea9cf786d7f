#include "liouwave/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "liouwave/error.hpp"
#include "liouwave/specfun.hpp"

namespace liouwave {

namespace {

void require_finite(const SpacetimePoint& p, double k)
{
    if (!std::isfinite(p.t) || !std::isfinite(p.X) || !std::isfinite(p.Xp) || !std::isfinite(k)) {
        throw DomainError("kernel: non-finite input");
    }
}

} // namespace

bool inside_cone(const SpacetimePoint& p)
{
    return std::fabs(p.X - p.Xp) < std::fabs(p.t);
}

KernelArgument kernel_argument(const SpacetimePoint& p, const PotentialParams& params)
{
    require_finite(p, params.k);
    const double at = std::fabs(p.t);
    const double ad = std::fabs(p.X - p.Xp);
    if (ad > at) {
        const double slack = kConeSlackUlps * std::numeric_limits<double>::epsilon() * std::max(ad, 1.0);
        if (ad - at > slack) {
            throw DomainError("kernel_argument: point outside the light cone (|X-X'| = " + std::to_string(ad) +
                              " > |t| = " + std::to_string(at) + ")");
        }
        return {0.0};
    }
    if (params.k == 0.0) {
        return {0.0};
    }
    const double radicand = 4.0 * std::exp(p.X + p.Xp) * std::sinh(0.5 * (at + ad)) * std::sinh(0.5 * (at - ad));
    return {std::fabs(params.k) * std::sqrt(radicand)};
}

KernelPartials kernel_argument_partials(const SpacetimePoint& p, const PotentialParams& params)
{
    const double Z = kernel_argument(p, params).Z;
    if (Z == 0.0) {
        throw SingularityError("kernel_argument_partials: Z = 0 (on the light cone or k = 0)");
    }
    const double k2 = params.k * params.k;
    const double k4 = k2 * k2;
    const double eS = std::exp(p.X + p.Xp);
    const double e2X = std::exp(2.0 * p.X);
    const double shD = std::sinh(p.X - p.Xp);
    const double sht = std::sinh(p.t);
    const double cht = std::cosh(p.t);
    const double iZ = 1.0 / Z;
    const double iZ3 = iZ * iZ * iZ;

    KernelPartials d{};
    d.dZ_dX = 0.5 * Z - k2 * eS * shD * iZ;
    d.d2Z_dX2 = 0.25 * Z - k2 * e2X * iZ - k4 * eS * eS * shD * shD * iZ3;
    d.dZ_dt = k2 * eS * sht * iZ;
    d.d2Z_dt2 = k2 * eS * cht * iZ - k4 * eS * eS * sht * sht * iZ3;
    return d;
}

double wave_kernel(const SpacetimePoint& p, const PotentialParams& params, double a, double b)
{
    const double Z = kernel_argument(p, params).Z;
    double w = 0.0;
    if (a != 0.0) {
        w += a * specfun::bessel_j0(Z);
    }
    if (b != 0.0) {
        if (Z == 0.0) {
            throw SingularityError("wave_kernel: Y0 branch is singular at Z = 0");
        }
        w += b * specfun::bessel_y0(Z);
    }
    return w;
}

double pde_residual(const SpacetimePoint& p, const PotentialParams& params, double a, double b, double h)
{
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("pde_residual: step must be positive");
    }
    const SpacetimePoint stencil[5] = {
        p,
        {p.t, p.X + h, p.Xp},
        {p.t, p.X - h, p.Xp},
        {p.t + h, p.X, p.Xp},
        {p.t - h, p.X, p.Xp},
    };
    for (const auto& q : stencil) {
        // Sign change of t would fold the stencil onto the mirrored cone.
        if (!inside_cone(q) || (q.t > 0.0) != (p.t > 0.0)) {
            throw DomainError("pde_residual: stencil exits the light cone");
        }
    }
    double w[5];
    for (int i = 0; i < 5; ++i) {
        w[i] = wave_kernel(stencil[i], params, a, b);
    }
    const double ih2 = 1.0 / (h * h);
    const double wxx = (w[1] - 2.0 * w[0] + w[2]) * ih2;
    const double wtt = (w[3] - 2.0 * w[0] + w[4]) * ih2;
    const double k2 = params.k * params.k;
    return wxx - k2 * std::exp(2.0 * p.X) * w[0] - wtt;
}

} // namespace liouwave
