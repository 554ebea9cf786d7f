#ifndef LIOUWAVE_FD_ORACLE_HPP
#define LIOUWAVE_FD_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "liouwave/profile.hpp"
#include "liouwave/reductions.hpp"
#include "liouwave/solution_field.hpp"

namespace liouwave {

/// Truncated domain and steps of the explicit leapfrog oracle.
struct FDConfig {
    double x_min = -4.0;
    double x_max = 4.0;
    double dx = 1e-3;
    double dt = 0.9e-3;
    double T = 1.0;
    double cfl_safety = 0.9;
    /// Times to record (each in [0, T]); empty means {T}. A time is recorded
    /// at the nearest step and reported with that step's exact time.
    std::vector<double> output_times;
};

/// Config with the minimal padded domain [a - T - 1, b + T + 1] and
/// dt = cfl * dx.
FDConfig make_fd_config(const Interval& support, double T, double dx, double cfl = 0.9);

/// Throws ConfigError on CFL violation, insufficient padding or bad steps.
void validate(const FDConfig& cfg, const Interval& support);

using Potential = std::function<double(double)>;

/// Leapfrog state (U^{n-1}, U^n) on x_j = x_min + j dx with homogeneous
/// Dirichlet ends, for U_tt = U_XX - V(X) U.
class LeapfrogWave {
public:
    LeapfrogWave(std::vector<double> grid, std::vector<double> potential, double dt);

    /// Sets U^0 = 0, U^1 = dt f(X_j).
    void start(const InitialProfile& f);
    /// U^{n+1} = 2U^n - U^{n-1} + dt^2 (D_xx U^n - V U^n).
    void step();
    /// Swaps (U^{n-1}, U^n) so that further steps run backward in time.
    void reverse();

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& current() const { return curr_; }
    const std::vector<double>& previous() const { return prev_; }
    double dt() const { return dt_; }

private:
    std::vector<double> grid_;
    std::vector<double> potential_;
    std::vector<double> prev_;
    std::vector<double> curr_;
    std::vector<double> next_;
    double dt_;
    double dx_;
};

/// Uniform grid of the config and the step count N with dt_eff = T / N <= dt.
std::vector<double> fd_grid(const FDConfig& cfg);
std::size_t fd_step_count(const FDConfig& cfg);

/// Leapfrog solution of U_tt = U_XX - V(X) U, U(0) = 0, U_t(0) = f.
/// Throws ConfigError for invalid configs, DomainError if V is not finite on
/// the grid.
SolutionField fd_wave_solve(const Potential& V, const InitialProfile& f, const FDConfig& cfg);

/// Leapfrog for v_tt + (alpha + beta) v_t + alpha beta v = v_XX with the
/// damping term centred in time. Startup v^1 = dt f (1 - (alpha + beta) dt / 2),
/// which reduces to the wave startup when alpha = beta = 0.
SolutionField fd_telegraph_solve(const TelegraphParams& params, const InitialProfile& f, const FDConfig& cfg);

} // namespace liouwave

#endif
