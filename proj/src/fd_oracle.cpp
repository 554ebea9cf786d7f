#include "liouwave/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "liouwave/error.hpp"

namespace liouwave {

FDConfig make_fd_config(const Interval& support, double T, double dx, double cfl)
{
    FDConfig cfg;
    cfg.x_min = support.lo - T - 1.0;
    cfg.x_max = support.hi + T + 1.0;
    cfg.dx = dx;
    cfg.cfl_safety = cfl;
    cfg.dt = cfl * dx;
    cfg.T = T;
    return cfg;
}

void validate(const FDConfig& cfg, const Interval& support)
{
    const auto bad = [](const std::string& m) { throw ConfigError("fd config: " + m); };
    if (!(cfg.dx > 0.0) || !(cfg.dt > 0.0) || !(cfg.T > 0.0)) {
        bad("dx, dt and T must be > 0");
    }
    if (!(cfg.cfl_safety > 0.0) || cfg.cfl_safety > 1.0) {
        bad("cfl_safety must lie in (0, 1]");
    }
    if (cfg.dt > cfg.cfl_safety * cfg.dx * (1.0 + 1e-12)) {
        bad("CFL violation: dt > cfl_safety * dx");
    }
    if (cfg.x_min > support.lo - cfg.T - 1.0 || cfg.x_max < support.hi + cfg.T + 1.0) {
        bad("domain must cover [a - T - 1, b + T + 1]");
    }
    for (const double t : cfg.output_times) {
        if (!(t >= 0.0) || t > cfg.T * (1.0 + 1e-12)) {
            bad("output times must lie in [0, T]");
        }
    }
}

std::vector<double> fd_grid(const FDConfig& cfg)
{
    const auto m = static_cast<std::size_t>(std::llround((cfg.x_max - cfg.x_min) / cfg.dx));
    std::vector<double> x(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        x[j] = cfg.x_min + static_cast<double>(j) * cfg.dx;
    }
    return x;
}

std::size_t fd_step_count(const FDConfig& cfg)
{
    return static_cast<std::size_t>(std::ceil(cfg.T / cfg.dt - 1e-9));
}

LeapfrogWave::LeapfrogWave(std::vector<double> grid, std::vector<double> potential, double dt)
    : grid_(std::move(grid)), potential_(std::move(potential)), dt_(dt), dx_(grid_.size() > 1 ? grid_[1] - grid_[0] : 1.0)
{
    if (grid_.size() < 3 || potential_.size() != grid_.size()) {
        throw ConfigError("LeapfrogWave: need >= 3 grid points and one potential value per point");
    }
    prev_.assign(grid_.size(), 0.0);
    curr_.assign(grid_.size(), 0.0);
    next_.assign(grid_.size(), 0.0);
}

void LeapfrogWave::start(const InitialProfile& f)
{
    std::fill(prev_.begin(), prev_.end(), 0.0);
    for (std::size_t j = 1; j + 1 < grid_.size(); ++j) {
        curr_[j] = dt_ * f(grid_[j]);
    }
    curr_.front() = 0.0;
    curr_.back() = 0.0;
}

void LeapfrogWave::step()
{
    const double r = (dt_ * dt_) / (dx_ * dx_);
    const double dt2 = dt_ * dt_;
    const std::size_t n = grid_.size();
    for (std::size_t j = 1; j + 1 < n; ++j) {
        next_[j] = 2.0 * curr_[j] - prev_[j] + r * (curr_[j + 1] - 2.0 * curr_[j] + curr_[j - 1]) -
                   dt2 * potential_[j] * curr_[j];
    }
    next_.front() = 0.0;
    next_.back() = 0.0;
    std::swap(prev_, curr_);
    std::swap(curr_, next_);
}

void LeapfrogWave::reverse()
{
    std::swap(prev_, curr_);
}

namespace {

struct Schedule {
    std::vector<double> times;
    std::vector<std::size_t> steps;
    std::size_t n_steps;
    double dt;
};

Schedule make_schedule(const FDConfig& cfg)
{
    Schedule s;
    s.n_steps = fd_step_count(cfg);
    s.dt = cfg.T / static_cast<double>(s.n_steps);
    std::vector<double> req = cfg.output_times.empty() ? std::vector<double>{cfg.T} : cfg.output_times;
    std::sort(req.begin(), req.end());
    for (const double t : req) {
        const auto n = std::min<std::size_t>(s.n_steps, static_cast<std::size_t>(std::llround(t / s.dt)));
        s.steps.push_back(n);
        s.times.push_back(static_cast<double>(n) * s.dt);
    }
    return s;
}

template <class Stepper>
SolutionField run(Stepper& stepper, const Schedule& sched, std::vector<double> grid)
{
    SolutionField field(sched.times, std::move(grid), Provenance::fd_oracle);
    std::size_t next_out = 0;
    const auto record = [&](std::size_t n, const std::vector<double>& u) {
        while (next_out < sched.steps.size() && sched.steps[next_out] == n) {
            std::copy(u.begin(), u.end(), field.values.begin() + static_cast<std::ptrdiff_t>(next_out * u.size()));
            ++next_out;
        }
    };
    record(0, stepper.previous());
    record(1, stepper.current());
    for (std::size_t n = 2; n <= sched.n_steps; ++n) {
        stepper.step();
        record(n, stepper.current());
    }
    return field;
}

// Leapfrog with centred damping; same state layout as LeapfrogWave.
class LeapfrogTelegraph {
public:
    LeapfrogTelegraph(std::vector<double> grid, double dt, double sigma, double mu)
        : grid_(std::move(grid)), dt_(dt), dx_(grid_[1] - grid_[0]), sigma_(sigma), mu_(mu)
    {
        prev_.assign(grid_.size(), 0.0);
        curr_.assign(grid_.size(), 0.0);
        next_.assign(grid_.size(), 0.0);
    }

    void start(const InitialProfile& f)
    {
        const double v1 = dt_ * (1.0 - 0.5 * sigma_ * dt_);
        for (std::size_t j = 1; j + 1 < grid_.size(); ++j) {
            curr_[j] = v1 * f(grid_[j]);
        }
    }

    void step()
    {
        const double idt2 = 1.0 / (dt_ * dt_);
        const double idx2 = 1.0 / (dx_ * dx_);
        const double half_damp = 0.5 * sigma_ / dt_;
        const double lead = 1.0 / (idt2 + half_damp);
        const std::size_t n = grid_.size();
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double lap = (curr_[j + 1] - 2.0 * curr_[j] + curr_[j - 1]) * idx2;
            next_[j] = lead * ((2.0 * curr_[j] - prev_[j]) * idt2 + half_damp * prev_[j] + lap - mu_ * curr_[j]);
        }
        next_.front() = 0.0;
        next_.back() = 0.0;
        std::swap(prev_, curr_);
        std::swap(curr_, next_);
    }

    const std::vector<double>& current() const { return curr_; }
    const std::vector<double>& previous() const { return prev_; }

private:
    std::vector<double> grid_;
    std::vector<double> prev_;
    std::vector<double> curr_;
    std::vector<double> next_;
    double dt_;
    double dx_;
    double sigma_;
    double mu_;
};

} // namespace

SolutionField fd_wave_solve(const Potential& V, const InitialProfile& f, const FDConfig& cfg)
{
    validate(cfg, f.support());
    auto grid = fd_grid(cfg);
    std::vector<double> pot(grid.size());
    double vmax = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        pot[j] = V ? V(grid[j]) : 0.0;
        if (!std::isfinite(pot[j])) {
            throw DomainError("fd_wave_solve: potential is not finite at X = " + std::to_string(grid[j]));
        }
        vmax = std::max(vmax, pot[j]);
    }
    const Schedule sched = make_schedule(cfg);
    // von Neumann bound for the leapfrog with a nonnegative potential.
    if (sched.dt * sched.dt * (4.0 / (cfg.dx * cfg.dx) + vmax) > 4.0) {
        throw ConfigError("fd_wave_solve: dt too large for the potential (dt^2 (4/dx^2 + max V) > 4)");
    }
    LeapfrogWave stepper(grid, std::move(pot), sched.dt);
    stepper.start(f);
    return run(stepper, sched, std::move(grid));
}

SolutionField fd_telegraph_solve(const TelegraphParams& params, const InitialProfile& f, const FDConfig& cfg)
{
    validate(params);
    validate(cfg, f.support());
    auto grid = fd_grid(cfg);
    const Schedule sched = make_schedule(cfg);
    LeapfrogTelegraph stepper(grid, sched.dt, params.alpha + params.beta, params.alpha * params.beta);
    stepper.start(f);
    return run(stepper, sched, std::move(grid));
}

} // namespace liouwave
