#ifndef LIOUWAVE_KERNEL_HPP
#define LIOUWAVE_KERNEL_HPP

namespace liouwave {

/// Coupling of the Liouville potential k^2 e^{2X}. Only |k| enters the kernel.
struct PotentialParams {
    double k = 0.0;
};

/// Observation time t, observation coordinate X and source coordinate X'.
struct SpacetimePoint {
    double t = 0.0;
    double X = 0.0;
    double Xp = 0.0;
};

/// Z = |k| sqrt(2 e^{X+X'} (cosh t - cosh(X - X'))), Z >= 0.
struct KernelArgument {
    double Z = 0.0;
};

struct KernelPartials {
    double dZ_dX;
    double d2Z_dX2;
    double dZ_dt;
    double d2Z_dt2;
};

/// Points with |X - X'| exceeding |t| by at most this many ulps (relative)
/// are treated as lying on the light cone.
inline constexpr double kConeSlackUlps = 8.0;

/// Returns true if |X - X'| < |t|.
bool inside_cone(const SpacetimePoint& p);

/// Kernel argument on the closed light cone. The radicand is evaluated as
/// 4 e^{X+X'} sinh((|t|+|D|)/2) sinh((|t|-|D|)/2), D = X - X', which stays
/// accurate near the cone where cosh t - cosh D cancels.
/// Throws DomainError outside the closed cone or for non-finite input.
KernelArgument kernel_argument(const SpacetimePoint& p, const PotentialParams& params);

/// Closed-form first and second partials of Z in X and t.
/// Throws SingularityError when Z == 0 (on the cone, or k == 0).
KernelPartials kernel_argument_partials(const SpacetimePoint& p, const PotentialParams& params);

/// General kernel a J0(Z) + b Y0(Z). With b != 0 the point must be strictly
/// inside the cone.
double wave_kernel(const SpacetimePoint& p, const PotentialParams& params, double a, double b);

/// (d^2/dX^2 - k^2 e^{2X} - d^2/dt^2) applied to wave_kernel with second-order
/// central differences of step h. Vanishes to O(h^2) for an exact solution.
/// Throws DomainError if any stencil point leaves the open cone.
double pde_residual(const SpacetimePoint& p, const PotentialParams& params, double a, double b, double h);

} // namespace liouwave

#endif
