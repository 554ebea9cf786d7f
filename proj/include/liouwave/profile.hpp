#ifndef LIOUWAVE_PROFILE_HPP
#define LIOUWAVE_PROFILE_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace liouwave {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/// exp(-1 / (1 - s^2)) with s = (2X - a - b) / (b - a); zero outside (a, b).
struct BumpProfile {
    Interval support;
};

/// Natural cubic spline through (nodes, values), identically zero outside
/// [nodes.front(), nodes.back()]. End values must be zero.
struct SampledProfile {
    std::vector<double> nodes;
    std::vector<double> values;
    std::vector<double> second_derivs;
};

/// Arbitrary callable restricted to a declared support.
struct FunctionProfile {
    std::function<double(double)> fn;
    std::string name;
};

/// Compactly supported initial velocity f of the Cauchy problem.
class InitialProfile {
public:
    /// Canonical C-infinity bump on [a, b]. Throws DomainError unless a < b.
    static InitialProfile bump(double a, double b);

    /// Samples on a strictly increasing grid. The support is the span between
    /// the last zero sample before the first nonzero one and the first zero
    /// sample after the last nonzero one. Throws DomainError if the nonzero
    /// samples touch either end of the grid or the grid is not increasing.
    static InitialProfile sampled(std::vector<double> nodes, std::vector<double> values);

    /// User-supplied function, forced to zero outside [a, b]. The caller is
    /// responsible for smoothness; used for derived data such as the
    /// per-frequency data of the hyperbolic Fourier route.
    static InitialProfile function(std::function<double(double)> fn, double a, double b, std::string name);

    /// A profile scaled pointwise by `factor`.
    InitialProfile scaled(double factor) const;

    double operator()(double X) const;

    const Interval& support() const { return support_; }
    bool is_sampled() const { return std::holds_alternative<SampledProfile>(repr_); }
    /// Short description, e.g. "bump:-1:1" or "sampled:201".
    std::string describe() const;

    /// Sampled data (nodes/values) for sampled profiles; empty otherwise.
    const SampledProfile* samples() const { return std::get_if<SampledProfile>(&repr_); }

private:
    InitialProfile() = default;

    std::variant<BumpProfile, SampledProfile, FunctionProfile> repr_;
    Interval support_;
    double scale_ = 1.0;
};

} // namespace liouwave

#endif
