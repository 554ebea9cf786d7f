#ifndef LIOUWAVE_SOLUTION_FIELD_HPP
#define LIOUWAVE_SOLUTION_FIELD_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace liouwave {

enum class Provenance { quadrature, regularized, fd_oracle, closed_form };

std::string_view to_string(Provenance p);

/// Solution samples U(t_i, X_j) stored row-major by time.
struct SolutionField {
    std::vector<double> times;
    std::vector<double> positions;
    std::vector<double> values;
    Provenance provenance = Provenance::quadrature;

    SolutionField() = default;
    SolutionField(std::vector<double> t, std::vector<double> x, Provenance prov);

    double& at(std::size_t ti, std::size_t xi) { return values[ti * positions.size() + xi]; }
    double at(std::size_t ti, std::size_t xi) const { return values[ti * positions.size() + xi]; }

    /// Linear interpolation in X along time row `ti`; 0 outside the grid.
    double interpolate(std::size_t ti, double X) const;
};

} // namespace liouwave

#endif
