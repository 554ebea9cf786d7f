#ifndef LIOUWAVE_PROPAGATOR_HPP
#define LIOUWAVE_PROPAGATOR_HPP

#include <vector>

#include "liouwave/kernel.hpp"
#include "liouwave/profile.hpp"
#include "liouwave/quadrature.hpp"
#include "liouwave/solution_field.hpp"

namespace liouwave {

/// Minimum Gauss-Legendre order accepted by the solvers.
inline constexpr int kMinSolverOrder = 8;

/// Solution of U_tt = U_XX - k^2 e^{2X} U with U(0) = 0, U_t(0) = f:
///
///   U(t, X) = 1/2 * integral over |X - X'| < t of J0(Z(t, X, X')) f(X') dX'.
///
/// The factor 1/2 reproduces d'Alembert's formula at k = 0. The integral runs
/// over the cone intersected with supp f, split into quad.panels() panels.
/// Throws DomainError for t <= 0 and ConfigError for quad.order() < 8.
double solve_cauchy(const PotentialParams& params, const InitialProfile& f, double t, double X,
                    const CompositeRule& quad);

/// Same value computed after the substitution sinh((X - X')/2) = z sinh(t/2),
/// which maps each half of the cone onto z in [0, 1]:
///
///   U = sum over X' = X +- 2 asinh(z s) of
///       integral_0^1 J0(2|k| s sqrt(e^{X+X'} (1 - z^2))) f(X') s / sqrt(1 + z^2 s^2) dz,
///
/// with s = sinh(t/2). Each branch is restricted to the z-range mapping into
/// supp f before panelling.
double solve_cauchy_regularized(const PotentialParams& params, const InitialProfile& f, double t, double X,
                                const CompositeRule& quad);

/// U(t, X) / t for 0 < t <= 0.1; tends to f(X) with O(t^2) error.
double small_time_slope(const PotentialParams& params, const InitialProfile& f, double X, double t,
                        const CompositeRule& quad);

enum class PropagatorForm { raw, regularized };

/// Evaluates the propagator on a (times x positions) grid. Points are
/// independent and are distributed over worker threads; row order follows the
/// grid. A time of exactly 0 yields a zero row.
SolutionField solve_cauchy_field(const PotentialParams& params, const InitialProfile& f,
                                 const std::vector<double>& times, const std::vector<double>& positions,
                                 const CompositeRule& quad, PropagatorForm form = PropagatorForm::raw);

namespace detail {
void require_solver_inputs(double t, double X, const CompositeRule& quad, const char* fn);
} // namespace detail

} // namespace liouwave

#endif
