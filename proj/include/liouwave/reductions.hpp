#ifndef LIOUWAVE_REDUCTIONS_HPP
#define LIOUWAVE_REDUCTIONS_HPP

#include <functional>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "liouwave/kernel.hpp"
#include "liouwave/profile.hpp"
#include "liouwave/quadrature.hpp"

namespace liouwave {

// ---------------------------------------------------------------------------
// Constant potential (Klein-Gordon)

/// U_tt = U_XX - m2 U, U(0) = 0, U_t(0) = f, for either sign of m2:
///   U(t, X) = 1/2 * integral over |X - X'| < t of K(s) f(X') dX',  s = sqrt(t^2 - (X - X')^2),
/// with K(s) = J0(sqrt(m2) s) for m2 >= 0 and I0(sqrt(-m2) s) for m2 < 0.
double klein_gordon_solve(double m2, const InitialProfile& f, double t, double X, const CompositeRule& quad);

/// U_tt = U_XX - k^2 U: klein_gordon_solve(k^2, ...).
double constant_potential_solve(double k, const InitialProfile& f, double t, double X, const CompositeRule& quad);

/// Rescaling k -> k/lambda, X -> lambda X, t -> lambda t of the Liouville
/// kernel; as lambda -> 0 it tends to the constant-potential kernel.
struct ScalingStudy {
    std::vector<double> lambdas;  // strictly decreasing, positive
    std::vector<SpacetimePoint> samples;  // strictly inside the cone
    double k = 1.0;
};

/// Fixed sample set used by the CLI and the acceptance suite:
/// t in {0.5, 1}, X in {-0.2, 0, 0.2}, X' in {-0.1, 0.1}.
std::vector<SpacetimePoint> default_scaling_samples();

/// For each lambda, max over samples of |J0(Z_lambda) - J0(|k| sqrt(t^2 - D^2))|.
/// Throws DomainError for lambda <= 0, non-decreasing lambdas or samples
/// outside the open cone.
std::vector<double> scaling_limit_gap(const ScalingStudy& study);

// ---------------------------------------------------------------------------
// Telegraph equation  v_XX = v_tt + (alpha + beta) v_t + alpha beta v

struct TelegraphParams {
    double alpha = 0.0;
    double beta = 0.0;

    /// (alpha + beta) / 2
    double damping() const { return 0.5 * (alpha + beta); }
    /// |alpha - beta| / 2. After U = e^{ct} v the equation is
    /// U_tt = U_XX + mass^2 U (note the sign), so the kernel is I0(mass s).
    double mass() const;
};

/// Throws DomainError unless alpha, beta are finite and >= 0.
void validate(const TelegraphParams& params);

/// v(t, X) = e^{-ct} * klein_gordon_solve(-mass^2, f, t, X).
double telegraph_solve(const TelegraphParams& params, const InitialProfile& f, double t, double X,
                       const CompositeRule& quad);

// ---------------------------------------------------------------------------
// Hyperbolic plane (Poincare upper half-plane)

struct HyperbolicPoint {
    double x = 0.0;
    double y = 1.0;
};

/// Throws DomainError unless y > 0 and both coordinates are finite.
void validate(const HyperbolicPoint& w);

/// arccosh(((x - x')^2 + y^2 + y'^2) / (2 y y')), argument clamped to >= 1.
double geodesic_distance(const HyperbolicPoint& w, const HyperbolicPoint& wp);

/// Point at geodesic distance r from `center` in direction theta (the image of
/// the unit-disk point tanh(r/2) e^{i theta} under the isometry taking 0 to
/// `center`).
HyperbolicPoint geodesic_polar_point(const HyperbolicPoint& center, double r, double theta);

struct Box {
    double x0 = 0.0;
    double x1 = 0.0;
    double y0 = 0.0;
    double y1 = 0.0;
};

/// Compactly supported initial velocity on the half-plane.
class HyperbolicProfile {
public:
    /// Arbitrary f, forced to zero outside `box`. Throws DomainError if the
    /// box is empty or reaches y <= 0.
    static HyperbolicProfile general(std::function<double(double, double)> fn, Box box);
    /// f(x, y) = g(x) h(y) with box = supp g x supp h.
    static HyperbolicProfile separable(InitialProfile g, InitialProfile h);

    double operator()(double x, double y) const;
    double operator()(const HyperbolicPoint& w) const { return (*this)(w.x, w.y); }

    const Box& box() const { return box_; }
    bool is_separable() const { return factors_.has_value(); }
    /// (g, h) for separable profiles.
    const std::pair<InitialProfile, InitialProfile>& factors() const;

    /// Copy translated horizontally: f_s(x, y) = f(x - s, y).
    HyperbolicProfile shifted(double s) const;

private:
    HyperbolicProfile() = default;

    std::function<double(double, double)> fn_;
    Box box_;
    std::optional<std::pair<InitialProfile, InitialProfile>> factors_;
    double shift_ = 0.0;
};

/// 1 / (2 sqrt(2) pi): the normalization under which u_t(0, w) = f(w).
inline constexpr double kHyperbolicConstant = 1.0 / (2.0 * std::numbers::sqrt2 * std::numbers::pi);

/// Radial rule (over the substituted angle phi in [0, pi/2]) and number of
/// equispaced directions theta.
struct PolarQuadrature {
    CompositeRule radial{16, 8};
    int directions = 128;
};

/// Unnormalized integral of (cosh t - cosh d(w, w'))^{-1/2} f(w') dmu(w') over
/// the geodesic disk d < t. With sinh(r/2) = sinh(t/2) sin(phi) the measure
/// sinh r dr / sqrt(cosh t - cosh r) becomes 2 sqrt(2) sinh(t/2) sin(phi) dphi,
/// so the integrand is smooth on [0, pi/2] x [0, 2 pi).
double hyperbolic_disk_integral(const HyperbolicProfile& f, double t, const HyperbolicPoint& w,
                                const PolarQuadrature& quad);

/// u(t, w) = kHyperbolicConstant * hyperbolic_disk_integral(f, t, w) solves
/// u_tt = y^2 (u_xx + u_yy) + u/4, u(0) = 0, u_t(0) = f.
/// Throws DomainError for t <= 0 or an invalid w.
double hyperbolic_solve(const HyperbolicProfile& f, double t, const HyperbolicPoint& w,
                        const PolarQuadrature& quad);

/// Uniform frequency grid k_j = j dk, j = 0..floor(k_max/dk), trapezoidal weights.
struct FrequencyGrid {
    double k_max = 40.0;
    double dk = 0.1;
};

/// u(t, w) by Fourier transform in x: per frequency k the transformed data
/// e^{-X/2} f^(k, e^X) is propagated with the Liouville solver at coupling |k|
/// (X = ln y), multiplied by y^{1/2} and transformed back.
/// Throws UnsupportedInput for non-separable f, DomainError for t <= 0.
double hyperbolic_fourier_check(const HyperbolicProfile& f, double t, const HyperbolicPoint& w,
                                const FrequencyGrid& grid, const CompositeRule& quad);

} // namespace liouwave

#endif
