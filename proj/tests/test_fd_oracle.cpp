#include <doctest.h>

#include <cmath>

#include "liouwave/error.hpp"
#include "liouwave/fd_oracle.hpp"
#include "liouwave/propagator.hpp"
#include "oracles.hpp"

using namespace liouwave;

namespace {

const auto kBumpOracle = [](double x) { return oracle::bump(-1.0, 1.0, x); };

double max_error_vs_dalembert(const SolutionField& field, std::size_t ti)
{
    double err = 0.0;
    for (std::size_t j = 0; j < field.positions.size(); j += 25) {
        const double X = field.positions[j];
        err = std::max(err, std::fabs(field.at(ti, j) - oracle::dalembert(kBumpOracle, -1.0, 1.0, field.times[ti], X)));
    }
    return err;
}

} // namespace

TEST_CASE("free wave matches d'Alembert with second-order convergence")
{
    const auto f = InitialProfile::bump(-1.0, 1.0);
    auto fine = make_fd_config(f.support(), 1.0, 1e-3);
    fine.output_times = {0.5, 1.0};
    const auto u = fd_wave_solve(nullptr, f, fine);
    CHECK(u.provenance == Provenance::fd_oracle);
    CHECK(u.times[1] == doctest::Approx(1.0).epsilon(1e-14));
    const double e_fine = max_error_vs_dalembert(u, 1);
    CHECK(e_fine <= 1e-4);
    CHECK(max_error_vs_dalembert(u, 0) <= 1e-4);

    auto coarse = make_fd_config(f.support(), 1.0, 2e-3);
    const double e_coarse = max_error_vs_dalembert(fd_wave_solve(nullptr, f, coarse), 0);
    CHECK(e_coarse / e_fine == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("constant potential agrees with the Klein-Gordon quadrature")
{
    const auto f = InitialProfile::bump(-1.0, 1.0);
    const auto cfg = make_fd_config(f.support(), 1.0, 1e-3);
    const auto u = fd_wave_solve([](double) { return 2.25; }, f, cfg);
    const CompositeRule quad(32, 8);
    for (std::size_t j = 0; j < u.positions.size(); j += 50) {
        CHECK(std::fabs(u.at(0, j) - constant_potential_solve(1.5, f, 1.0, u.positions[j], quad)) <= 1e-5);
    }
}

TEST_CASE("finite propagation speed")
{
    const auto f = InitialProfile::bump(-1.0, 1.0);
    const auto cfg = make_fd_config(f.support(), 1.0, 1e-3);
    const auto u = fd_wave_solve([](double x) { return 2.0 * std::exp(x); }, f, cfg);
    for (std::size_t j = 0; j < u.positions.size(); ++j) {
        const double X = u.positions[j];
        if (X < -2.0 - 3e-3 || X > 2.0 + 3e-3) {
            CHECK(std::fabs(u.at(0, j)) <= 1e-8);
        }
    }
}

TEST_CASE("leapfrog runs backward to the initial state")
{
    const auto f = InitialProfile::bump(-1.0, 1.0);
    const auto cfg = make_fd_config(f.support(), 1.0, 1e-3);
    const auto grid = fd_grid(cfg);
    std::vector<double> pot(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        pot[j] = 2.0 * std::exp(grid[j]);
    }
    const std::size_t n = fd_step_count(cfg);
    LeapfrogWave w(grid, pot, cfg.T / static_cast<double>(n));
    w.start(f);
    const std::vector<double> u1 = w.current();
    for (std::size_t i = 1; i < n; ++i) {
        w.step();
    }
    w.reverse();
    for (std::size_t i = 1; i < n; ++i) {
        w.step();
    }
    double e0 = 0.0;
    double e1 = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        e0 = std::max(e0, std::fabs(w.current()[j]));
        e1 = std::max(e1, std::fabs(w.previous()[j] - u1[j]));
    }
    CHECK(e0 <= 1e-8);
    CHECK(e1 <= 1e-8);
}

TEST_CASE("telegraph leapfrog")
{
    const auto f = InitialProfile::bump(-1.0, 1.0);
    auto cfg = make_fd_config(f.support(), 1.0, 1e-3);
    cfg.output_times = {0.5, 1.0};
    const auto wave = fd_wave_solve(nullptr, f, cfg);
    const auto tel0 = fd_telegraph_solve({0.0, 0.0}, f, cfg);
    REQUIRE(tel0.values.size() == wave.values.size());
    double gap = 0.0;
    for (std::size_t i = 0; i < wave.values.size(); ++i) {
        gap = std::max(gap, std::fabs(tel0.values[i] - wave.values[i]));
    }
    CHECK(gap <= 1e-10);

    const auto tel1 = fd_telegraph_solve({1.0, 1.0}, f, cfg);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < wave.positions.size(); j += 25) {
            CHECK(std::fabs(std::exp(tel1.times[i]) * tel1.at(i, j) - wave.at(i, j)) <= 1e-5);
        }
    }

    const auto tel = fd_telegraph_solve({0.5, 2.0}, f, cfg);
    const CompositeRule quad(32, 8);
    for (std::size_t j = 0; j < tel.positions.size(); j += 50) {
        CHECK(std::fabs(tel.at(1, j) - telegraph_solve({0.5, 2.0}, f, 1.0, tel.positions[j], quad)) <= 1e-5);
    }
    CHECK_THROWS_AS(fd_telegraph_solve({-0.5, 2.0}, f, cfg), DomainError);
}

TEST_CASE("configuration checks")
{
    const auto f = InitialProfile::bump(-1.0, 1.0);
    auto cfg = make_fd_config(f.support(), 1.0, 1e-2);
    CHECK_NOTHROW(validate(cfg, f.support()));

    auto bad = cfg;
    bad.dt = 1.01 * cfg.dx;
    CHECK_THROWS_AS(fd_wave_solve(nullptr, f, bad), ConfigError);
    bad = cfg;
    bad.x_max = 2.5;
    CHECK_THROWS_AS(fd_wave_solve(nullptr, f, bad), ConfigError);
    bad = cfg;
    bad.dx = 0.0;
    CHECK_THROWS_AS(validate(bad, f.support()), ConfigError);
    bad = cfg;
    bad.output_times = {1.5};
    CHECK_THROWS_AS(validate(bad, f.support()), ConfigError);
    bad = cfg;
    bad.cfl_safety = 1.0;
    bad.dt = cfg.dx;
    CHECK_THROWS_AS(fd_wave_solve([](double) { return 100.0; }, f, bad), ConfigError);
    CHECK_THROWS_AS(fd_wave_solve([](double) { return NAN; }, f, cfg), DomainError);
}
