// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "liouwave/propagator.hpp"
#include "liouwave/reductions.hpp"
#include "liouwave/specfun.hpp"
#include "liouwave/verify.hpp"
#include "oracles.hpp"

using namespace liouwave;
namespace v = liouwave::verify;

namespace {

// d'Alembert by tanh-sinh on the same grid the suite uses.
v::Check dalembert_vs_tanh_sinh()
{
    const auto f = InitialProfile::bump(-1.0, 1.0);
    const auto fo = [](double x) { return oracle::bump(-1.0, 1.0, x); };
    const CompositeRule quad;
    double err = 0.0;
    for (const double t : {0.5, 1.0, 2.0}) {
        for (const double X : v::linspace(-3.0, 3.0, 41)) {
            err = std::max(err, std::fabs(solve_cauchy({0.0}, f, t, X, quad) - oracle::dalembert(fo, -1.0, 1.0, t, X)));
        }
    }
    return v::at_most("propagator vs tanh-sinh d'Alembert", err, 1e-10);
}

// Slope error against the bump evaluated independently.
v::Check slope_vs_oracle_bump()
{
    const auto f = InitialProfile::bump(-1.0, 1.0);
    const CompositeRule quad;
    double err = 0.0;
    for (const double X : v::linspace(-0.8, 0.8, 11)) {
        err = std::max(err, std::fabs(solve_cauchy({1.0}, f, 1e-2, X, quad) / 1e-2 - oracle::bump(-1.0, 1.0, X)));
    }
    return v::at_most("slope error vs independent bump", err, 1e-4);
}

// Gaps recomputed with the long-double cosh-difference kernel and series J0.
std::vector<v::Check> scaling_vs_series()
{
    const std::vector<double> lambdas = {0.5, 0.1, 0.01};
    std::vector<double> gaps;
    for (const double lam : lambdas) {
        double g = 0.0;
        for (const auto& p : default_scaling_samples()) {
            const double z = static_cast<double>(oracle::kernel_z(lam * p.t, lam * p.X, lam * p.Xp, 1.0L / lam));
            const double d = p.X - p.Xp;
            g = std::max(g, std::fabs(oracle::j0_series(z) - oracle::j0_series(std::sqrt(p.t * p.t - d * d))));
        }
        gaps.push_back(g);
    }
    const auto lib = scaling_limit_gap({lambdas, default_scaling_samples(), 1.0});
    double agree = 0.0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        agree = std::max(agree, std::fabs(gaps[i] - lib[i]));
    }
    return {v::at_most("series-oracle gap at lambda = 0.01", gaps.back(), 1e-3),
            v::at_most("series-oracle gap increase", std::max(gaps[1] - gaps[0], gaps[2] - gaps[1]), 0.0),
            v::at_most("library vs series-oracle gaps", agree, 1e-10)};
}

std::vector<v::Check> first_zero_vs_series()
{
    const double zs = oracle::bisect([](double x) { return oracle::j0_series(x); }, 2.0, 3.0);
    const double zl = oracle::bisect([](double x) { return specfun::bessel_j0(x); }, 2.0, 3.0);
    return {v::at_most("series-oracle first zero vs 2.404825557695773", std::fabs(zs - 2.404825557695773), 1e-12),
            v::at_most("library vs series-oracle first zero", std::fabs(zl - zs), 1e-12)};
}

struct Criterion {
    const char* suite;
    const char* title;
    std::vector<v::Check> (*extra)();
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"lemma1", "kernel-argument partials vs central differences", nullptr},
        {"prop2", "wave-equation residual of the J0 and Y0 kernels", nullptr},
        {"dalembert", "k = 0 normalization against d'Alembert",
         [] { return std::vector<v::Check>{dalembert_vs_tanh_sinh()}; }},
        {"small-time", "small-time slope U/t -> f", [] { return std::vector<v::Check>{slope_vs_oracle_bump()}; }},
        {"oracle", "quadrature vs leapfrog and dx refinement", nullptr},
        {"regularized", "regularized vs raw propagator", nullptr},
        {"scaling", "scaling limit to the constant-potential kernel", &scaling_vs_series},
        {"telegraph", "telegraph reduction vs damped leapfrog", nullptr},
        {"hyperbolic-mass", "hyperbolic disk mass and normalization", nullptr},
        {"fourier", "Fourier route vs direct hyperbolic solve", nullptr},
        {"specfun", "Bessel ODE, Wronskian, first zero of J0", &first_zero_vs_series},
    };

    int failed = 0;
    std::vector<std::string> details;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto rep = v::run_suite(c.suite);
        if (c.extra) {
            for (auto& chk : c.extra()) {
                rep.checks.push_back(std::move(chk));
            }
        }
        const bool ok = rep.passed();
        failed += ok ? 0 : 1;
        std::printf("%s  %2zu  %-16s %s\n", ok ? "PASS" : "FAIL", i + 1, c.suite, c.title);
        for (const auto& chk : rep.checks) {
            details.push_back("      " + std::to_string(i + 1) + "  " + v::describe(chk));
        }
        for (const auto& n : rep.notes) {
            details.push_back("      " + std::to_string(i + 1) + "  note: " + n);
        }
    }
    std::printf("\n%d of %zu criteria passed\n\ndetails:\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    for (const auto& d : details) {
        std::printf("%s\n", d.c_str());
    }
    return failed == 0 ? 0 : 1;
}
