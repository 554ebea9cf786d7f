#include "liouwave/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "liouwave/error.hpp"
#include "liouwave/parallel.hpp"
#include "liouwave/propagator.hpp"
#include "liouwave/specfun.hpp"

namespace liouwave {

double klein_gordon_solve(double m2, const InitialProfile& f, double t, double X, const CompositeRule& quad)
{
    detail::require_solver_inputs(t, X, quad, "klein_gordon_solve");
    if (!std::isfinite(m2)) {
        throw DomainError("klein_gordon_solve: non-finite mass term");
    }
    const double lo = std::max(X - t, f.support().lo);
    const double hi = std::min(X + t, f.support().hi);
    if (!(hi > lo)) {
        return 0.0;
    }
    const double m = std::sqrt(std::fabs(m2));
    const bool oscillatory = m2 >= 0.0;
    const auto integrand = [&](double Xp) {
        const double d = std::fabs(X - Xp);
        const double s = std::sqrt(std::max(0.0, (t - d) * (t + d)));
        const double kern = oscillatory ? specfun::bessel_j0(m * s) : specfun::bessel_i0(m * s);
        return kern * f(Xp);
    };
    return 0.5 * quad.integrate(integrand, lo, hi);
}

double constant_potential_solve(double k, const InitialProfile& f, double t, double X, const CompositeRule& quad)
{
    if (!std::isfinite(k)) {
        throw DomainError("constant_potential_solve: non-finite k");
    }
    return klein_gordon_solve(k * k, f, t, X, quad);
}

std::vector<SpacetimePoint> default_scaling_samples()
{
    std::vector<SpacetimePoint> pts;
    for (const double t : {0.5, 1.0}) {
        for (const double X : {-0.2, 0.0, 0.2}) {
            for (const double Xp : {-0.1, 0.1}) {
                pts.push_back({t, X, Xp});
            }
        }
    }
    return pts;
}

std::vector<double> scaling_limit_gap(const ScalingStudy& study)
{
    for (std::size_t i = 0; i < study.lambdas.size(); ++i) {
        const double lam = study.lambdas[i];
        if (!(lam > 0.0) || !std::isfinite(lam)) {
            throw DomainError("scaling_limit_gap: lambda must be > 0");
        }
        if (i > 0 && !(lam < study.lambdas[i - 1])) {
            throw DomainError("scaling_limit_gap: lambdas must be strictly decreasing");
        }
    }
    for (const auto& p : study.samples) {
        if (!inside_cone(p)) {
            throw DomainError("scaling_limit_gap: sample outside the open light cone");
        }
    }
    const double ak = std::fabs(study.k);
    std::vector<double> gaps(study.lambdas.size(), 0.0);
    for (std::size_t i = 0; i < study.lambdas.size(); ++i) {
        const double lam = study.lambdas[i];
        double worst = 0.0;
        for (const auto& p : study.samples) {
            const double Zl = kernel_argument({lam * p.t, lam * p.X, lam * p.Xp}, {study.k / lam}).Z;
            const double d = p.X - p.Xp;
            const double Z0 = ak * std::sqrt((p.t - d) * (p.t + d));
            worst = std::max(worst, std::fabs(specfun::bessel_j0(Zl) - specfun::bessel_j0(Z0)));
        }
        gaps[i] = worst;
    }
    return gaps;
}

double TelegraphParams::mass() const
{
    return 0.5 * std::fabs(alpha - beta);
}

void validate(const TelegraphParams& params)
{
    if (!std::isfinite(params.alpha) || !std::isfinite(params.beta) || params.alpha < 0.0 || params.beta < 0.0) {
        throw DomainError("telegraph: alpha and beta must be finite and >= 0");
    }
}

double telegraph_solve(const TelegraphParams& params, const InitialProfile& f, double t, double X,
                       const CompositeRule& quad)
{
    validate(params);
    const double m = params.mass();
    const double U = klein_gordon_solve(-m * m, f, t, X, quad);
    return std::exp(-params.damping() * t) * U;
}

void validate(const HyperbolicPoint& w)
{
    if (!std::isfinite(w.x) || !std::isfinite(w.y) || !(w.y > 0.0)) {
        throw DomainError("hyperbolic point: need finite x and y > 0");
    }
}

double geodesic_distance(const HyperbolicPoint& w, const HyperbolicPoint& wp)
{
    const double dx = w.x - wp.x;
    const double dy = w.y - wp.y;
    // (dx^2 + y^2 + y'^2) / (2 y y') = 1 + (dx^2 + dy^2) / (2 y y'), written so
    // that nearby points do not lose the offset from 1.
    const double excess = (dx * dx + dy * dy) / (2.0 * w.y * wp.y);
    return std::acosh(1.0 + std::max(0.0, excess));
}

HyperbolicPoint geodesic_polar_point(const HyperbolicPoint& center, double r, double theta)
{
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    const double den = ch - sh * std::cos(theta);
    return {center.x + center.y * sh * std::sin(theta) / den, center.y / den};
}

HyperbolicProfile HyperbolicProfile::general(std::function<double(double, double)> fn, Box box)
{
    if (!fn || !(box.x0 < box.x1) || !(box.y0 < box.y1) || !(box.y0 > 0.0)) {
        throw DomainError("hyperbolic profile: need a callable and a box with 0 < y0 < y1, x0 < x1");
    }
    HyperbolicProfile p;
    p.fn_ = std::move(fn);
    p.box_ = box;
    return p;
}

HyperbolicProfile HyperbolicProfile::separable(InitialProfile g, InitialProfile h)
{
    const Box box{g.support().lo, g.support().hi, h.support().lo, h.support().hi};
    if (!(box.y0 > 0.0)) {
        throw DomainError("hyperbolic profile: y-factor support must lie in y > 0");
    }
    HyperbolicProfile p;
    p.fn_ = [g, h](double x, double y) { return g(x) * h(y); };
    p.box_ = box;
    p.factors_.emplace(std::move(g), std::move(h));
    return p;
}

double HyperbolicProfile::operator()(double x, double y) const
{
    if (x < box_.x0 || x > box_.x1 || y < box_.y0 || y > box_.y1) {
        return 0.0;
    }
    return fn_(x - shift_, y);
}

const std::pair<InitialProfile, InitialProfile>& HyperbolicProfile::factors() const
{
    if (!factors_) {
        throw UnsupportedInput("hyperbolic profile is not separable");
    }
    return *factors_;
}

HyperbolicProfile HyperbolicProfile::shifted(double s) const
{
    HyperbolicProfile p = *this;
    p.shift_ += s;
    p.box_.x0 += s;
    p.box_.x1 += s;
    if (p.factors_) {
        auto& g = p.factors_->first;
        g = InitialProfile::function([g0 = g, s](double x) { return g0(x - s); }, g.support().lo + s,
                                     g.support().hi + s, g.describe() + "+shift");
    }
    return p;
}

namespace {

// The geodesic disk of radius t about w is the Euclidean disk with centre
// (x, y cosh t) and radius y sinh t.
bool disk_misses_box(const HyperbolicProfile& f, double t, const HyperbolicPoint& w)
{
    const Box& b = f.box();
    const double R = w.y * std::sinh(t);
    const double cy = w.y * std::cosh(t);
    return w.x + R < b.x0 || w.x - R > b.x1 || cy + R < b.y0 || cy - R > b.y1;
}

} // namespace

double hyperbolic_disk_integral(const HyperbolicProfile& f, double t, const HyperbolicPoint& w,
                                const PolarQuadrature& quad)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("hyperbolic_solve: t must be > 0");
    }
    validate(w);
    if (quad.directions < 1) {
        throw ConfigError("hyperbolic_solve: need at least one direction");
    }
    const double st = std::sinh(0.5 * t);
    const int m = quad.directions;
    const double dtheta = 2.0 * std::numbers::pi / m;

    const auto radial = [&](double phi) {
        const double sphi = std::sin(phi);
        const double r = 2.0 * std::asinh(st * sphi);
        double ring = 0.0;
        for (int j = 0; j < m; ++j) {
            ring += f(geodesic_polar_point(w, r, j * dtheta));
        }
        return sphi * ring * dtheta;
    };
    return 2.0 * std::numbers::sqrt2 * st * quad.radial.integrate(radial, 0.0, 0.5 * std::numbers::pi);
}

double hyperbolic_solve(const HyperbolicProfile& f, double t, const HyperbolicPoint& w, const PolarQuadrature& quad)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("hyperbolic_solve: t must be > 0");
    }
    validate(w);
    if (disk_misses_box(f, t, w)) {
        return 0.0;
    }
    return kHyperbolicConstant * hyperbolic_disk_integral(f, t, w, quad);
}

double hyperbolic_fourier_check(const HyperbolicProfile& f, double t, const HyperbolicPoint& w,
                                const FrequencyGrid& grid, const CompositeRule& quad)
{
    if (!f.is_separable()) {
        throw UnsupportedInput("hyperbolic_fourier_check: profile must be separable");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("hyperbolic_fourier_check: t must be > 0");
    }
    validate(w);
    if (!(grid.dk > 0.0) || !(grid.k_max > 0.0)) {
        throw ConfigError("hyperbolic_fourier_check: need dk > 0 and k_max > 0");
    }
    const auto& [g, h] = f.factors();
    // Data in the Liouville variable X = ln y: e^{-X/2} h(e^X).
    const auto data = InitialProfile::function([h](double X) { return std::exp(-0.5 * X) * h(std::exp(X)); },
                                               std::log(h.support().lo), std::log(h.support().hi), "liouville-data");
    const double X = std::log(w.y);
    const double sqrt_y = std::sqrt(w.y);

    const auto n = static_cast<std::size_t>(std::floor(grid.k_max / grid.dk + 1e-9)) + 1;
    std::vector<double> contrib(n, 0.0);
    parallel_for(n, [&](std::size_t j) {
        const double k = static_cast<double>(j) * grid.dk;
        // Re(e^{ikx} g^(k)) = cos(kx) C(k) + sin(kx) S(k), g^(k) = C - iS.
        const double C = quad.integrate([&](double x) { return std::cos(k * x) * g(x); }, g.support().lo,
                                        g.support().hi);
        const double S = quad.integrate([&](double x) { return std::sin(k * x) * g(x); }, g.support().lo,
                                        g.support().hi);
        const double V = solve_cauchy({k}, data, t, X, quad);
        const double weight = (j == 0 || j + 1 == n) ? 0.5 * grid.dk : grid.dk;
        contrib[j] = weight * (std::cos(k * w.x) * C + std::sin(k * w.x) * S) * sqrt_y * V;
    });
    double total = 0.0;
    for (const double c : contrib) {
        total += c;
    }
    return total / std::numbers::pi;
}

} // namespace liouwave
