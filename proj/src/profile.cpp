#include "liouwave/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "liouwave/error.hpp"

namespace liouwave {

namespace {

double eval_bump(const BumpProfile& b, double X)
{
    const double lo = b.support.lo;
    const double hi = b.support.hi;
    if (!(X > lo && X < hi)) {
        return 0.0;
    }
    const double s = (2.0 * X - lo - hi) / (hi - lo);
    const double d = 1.0 - s * s;
    if (d <= 0.0) {
        return 0.0;
    }
    return std::exp(-1.0 / d);
}

double eval_spline(const SampledProfile& sp, double X)
{
    const auto& x = sp.nodes;
    if (!(X >= x.front() && X <= x.back())) {
        return 0.0;
    }
    auto it = std::upper_bound(x.begin(), x.end(), X);
    std::size_t hi = static_cast<std::size_t>(it - x.begin());
    if (hi >= x.size()) {
        hi = x.size() - 1;
    }
    const std::size_t lo = hi - 1;
    const double h = x[hi] - x[lo];
    const double A = (x[hi] - X) / h;
    const double B = (X - x[lo]) / h;
    const auto& y = sp.values;
    const auto& m = sp.second_derivs;
    return A * y[lo] + B * y[hi] + ((A * A * A - A) * m[lo] + (B * B * B - B) * m[hi]) * (h * h) / 6.0;
}

// Natural spline second derivatives (tridiagonal Thomas sweep).
std::vector<double> natural_spline(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    std::vector<double> m(n, 0.0);
    if (n < 3) {
        return m;
    }
    std::vector<double> c(n, 0.0);
    std::vector<double> d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = x[i] - x[i - 1];
        const double hr = x[i + 1] - x[i];
        const double diag = 2.0 * (hl + hr);
        const double rhs = 6.0 * ((y[i + 1] - y[i]) / hr - (y[i] - y[i - 1]) / hl);
        const double denom = diag - hl * c[i - 1];
        c[i] = hr / denom;
        d[i] = (rhs - hl * d[i - 1]) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m[i] = d[i] - c[i] * m[i + 1];
    }
    return m;
}

} // namespace

InitialProfile InitialProfile::bump(double a, double b)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw DomainError("bump profile: support must satisfy a < b");
    }
    InitialProfile p;
    p.repr_ = BumpProfile{{a, b}};
    p.support_ = {a, b};
    return p;
}

InitialProfile InitialProfile::sampled(std::vector<double> nodes, std::vector<double> values)
{
    if (nodes.size() != values.size() || nodes.size() < 3) {
        throw DomainError("sampled profile: need >= 3 (X, f) pairs of equal length");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i]) || !std::isfinite(values[i])) {
            throw DomainError("sampled profile: non-finite sample");
        }
        if (i > 0 && !(nodes[i] > nodes[i - 1])) {
            throw DomainError("sampled profile: nodes must be strictly increasing");
        }
    }
    const auto nz = [](double v) { return v != 0.0; };
    const auto first = std::find_if(values.begin(), values.end(), nz);
    if (first == values.end()) {
        throw DomainError("sampled profile: all samples are zero");
    }
    const auto last = std::find_if(values.rbegin(), values.rend(), nz);
    const std::size_t i0 = static_cast<std::size_t>(first - values.begin());
    const std::size_t i1 = values.size() - 1 - static_cast<std::size_t>(last - values.rbegin());
    if (i0 == 0 || i1 + 1 == values.size()) {
        throw DomainError("sampled profile: values at the support endpoints must be 0");
    }
    std::vector<double> x(nodes.begin() + static_cast<std::ptrdiff_t>(i0 - 1),
                          nodes.begin() + static_cast<std::ptrdiff_t>(i1 + 2));
    std::vector<double> y(values.begin() + static_cast<std::ptrdiff_t>(i0 - 1),
                          values.begin() + static_cast<std::ptrdiff_t>(i1 + 2));
    InitialProfile p;
    p.support_ = {x.front(), x.back()};
    auto m = natural_spline(x, y);
    p.repr_ = SampledProfile{std::move(x), std::move(y), std::move(m)};
    return p;
}

InitialProfile InitialProfile::function(std::function<double(double)> fn, double a, double b, std::string name)
{
    if (!fn || !std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw DomainError("function profile: need a callable and a < b");
    }
    InitialProfile p;
    p.repr_ = FunctionProfile{std::move(fn), std::move(name)};
    p.support_ = {a, b};
    return p;
}

InitialProfile InitialProfile::scaled(double factor) const
{
    InitialProfile p = *this;
    p.scale_ *= factor;
    return p;
}

double InitialProfile::operator()(double X) const
{
    const double v = std::visit(
        [this, X](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, BumpProfile>) {
                return eval_bump(r, X);
            } else if constexpr (std::is_same_v<T, SampledProfile>) {
                return eval_spline(r, X);
            } else {
                return (X >= support_.lo && X <= support_.hi) ? r.fn(X) : 0.0;
            }
        },
        repr_);
    return scale_ * v;
}

std::string InitialProfile::describe() const
{
    char buf[96];
    if (const auto* b = std::get_if<BumpProfile>(&repr_)) {
        std::snprintf(buf, sizeof buf, "bump:%.17g:%.17g", b->support.lo, b->support.hi);
    } else if (const auto* sp = std::get_if<SampledProfile>(&repr_)) {
        std::snprintf(buf, sizeof buf, "sampled:%zu", sp->nodes.size());
    } else {
        std::snprintf(buf, sizeof buf, "%s", std::get<FunctionProfile>(repr_).name.c_str());
    }
    std::string s = buf;
    if (scale_ != 1.0) {
        std::snprintf(buf, sizeof buf, "*%.17g", scale_);
        s += buf;
    }
    return s;
}

} // namespace liouwave
