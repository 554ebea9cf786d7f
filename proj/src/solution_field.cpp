#include "liouwave/solution_field.hpp"

#include <algorithm>

namespace liouwave {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::quadrature: return "quadrature";
    case Provenance::regularized: return "regularized";
    case Provenance::fd_oracle: return "fd-oracle";
    case Provenance::closed_form: return "closed-form";
    }
    return "unknown";
}

SolutionField::SolutionField(std::vector<double> t, std::vector<double> x, Provenance prov)
    : times(std::move(t)), positions(std::move(x)), values(times.size() * positions.size(), 0.0), provenance(prov)
{
}

double SolutionField::interpolate(std::size_t ti, double X) const
{
    const auto& x = positions;
    if (x.empty() || X < x.front() || X > x.back()) {
        return 0.0;
    }
    auto it = std::lower_bound(x.begin(), x.end(), X);
    std::size_t hi = static_cast<std::size_t>(it - x.begin());
    if (hi == 0) {
        return at(ti, 0);
    }
    const std::size_t lo = hi - 1;
    const double w = (X - x[lo]) / (x[hi] - x[lo]);
    return (1.0 - w) * at(ti, lo) + w * at(ti, hi);
}

} // namespace liouwave
