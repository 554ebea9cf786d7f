#ifndef LIOUWAVE_VERIFY_HPP
#define LIOUWAVE_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liouwave/kernel.hpp"

namespace liouwave::verify {

enum class Relation { at_most, at_least, within };

/// One measured quantity and the bound it is held to. For `within` the
/// measurement must lie in [bound - spread, bound + spread].
struct Check {
    std::string name;
    double measured = 0.0;
    Relation relation = Relation::at_most;
    double bound = 0.0;
    double spread = 0.0;
    bool passed = false;
};

Check at_most(std::string name, double measured, double bound);
Check at_least(std::string name, double measured, double bound);
Check within(std::string name, double measured, double target, double spread);

std::string describe(const Check& c);

struct SuiteReport {
    std::string name;
    std::string title;
    std::vector<Check> checks;
    /// Informational lines (per-point diagnostics, sample counts).
    std::vector<std::string> notes;

    bool passed() const;
};

/// Suite names in run order; "all" runs every one of them.
const std::vector<std::string>& suite_names();

/// Throws ConfigError for an unknown name.
SuiteReport run_suite(std::string_view name);

SuiteReport kernel_partials();
SuiteReport kernel_residual();
SuiteReport dalembert();
SuiteReport small_time();
SuiteReport oracle();
SuiteReport regularized();
SuiteReport scaling();
SuiteReport telegraph();
SuiteReport hyperbolic_mass();
SuiteReport fourier();
SuiteReport specfun();

/// count >= 2 equispaced points including both ends.
std::vector<double> linspace(double lo, double hi, int count);

/// The 5 x 5 x 5 grid on [0.5, 3] x [-1, 1] x [-1, 1] restricted to the open cone.
std::vector<SpacetimePoint> cone_samples();

inline constexpr double kCouplings[] = {0.5, 1.0, 2.0};

} // namespace liouwave::verify

#endif
