#include "liouwave/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liouwave/error.hpp"
#include "liouwave/fd_oracle.hpp"
#include "liouwave/parallel.hpp"
#include "liouwave/propagator.hpp"
#include "liouwave/reductions.hpp"
#include "liouwave/verify.hpp"

namespace liouwave::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::optional<double> to_double(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

double require_number(const std::string& s, const std::string& what)
{
    const auto v = to_double(s);
    if (!v || !std::isfinite(*v)) {
        throw ConfigError(what + ": '" + s + "' is not a finite number");
    }
    return *v;
}

std::vector<double> parse_list(const std::string& s, const std::string& what)
{
    std::vector<double> out;
    for (const auto& p : split(s, ',')) {
        out.push_back(require_number(p, what));
    }
    if (out.empty()) {
        throw ConfigError(what + ": empty list");
    }
    return out;
}

std::vector<double> parse_times(const std::string& s)
{
    auto t = parse_list(s, "--t");
    for (const double v : t) {
        if (v < 0.0) {
            throw ConfigError("--t: times must be >= 0");
        }
    }
    return t;
}

// One output table plus everything needed to reproduce it.
struct Result {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string provenance;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
    std::vector<std::string> notes;
};

std::string utc_now()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_csv(const Result& r, std::optional<double> wall, std::ostream& os)
{
    os << "# liouwave " << r.command << "\n";
    if (wall) {
        os << "# generated " << utc_now() << " wall_time_s=" << num(*wall) << "\n";
    }
    os << "# input";
    for (const auto& [k, v] : r.inputs) {
        os << " " << k << "=" << v;
    }
    os << "\n# provenance " << r.provenance << "\n";
    for (const auto& n : r.notes) {
        os << "# " << n << "\n";
    }
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        os << (i ? "," : "") << r.columns[i];
    }
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "");
            if (row[i].is_number()) {
                os << num(row[i].get<double>());
            } else if (row[i].is_boolean()) {
                os << (row[i].get<bool>() ? "true" : "false");
            } else {
                os << row[i].get<std::string>();
            }
        }
        os << "\n";
    }
}

void write_doc(const Result& r, std::optional<double> wall, std::ostream& os)
{
    Json doc;
    doc["command"] = r.command;
    if (wall) {
        doc["generated"] = utc_now();
        doc["wall_time_s"] = *wall;
    }
    Json inputs = Json::object();
    for (const auto& [k, v] : r.inputs) {
        inputs[k] = v;
    }
    doc["inputs"] = inputs;
    doc["provenance"] = r.provenance;
    doc["columns"] = r.columns;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json jr = Json::array();
        for (const auto& c : row) {
            // JSON has no NaN; emit null.
            jr.push_back(c.is_number() && !std::isfinite(c.get<double>()) ? Json() : c);
        }
        rows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(rows);
    doc["notes"] = r.notes;
    os << doc.dump(2) << "\n";
}

struct Options {
    double k = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    std::string profile = "bump:-1:1";
    std::string profile_y = "bump:1:2";
    std::string t = "1";
    std::string x_grid = "-3:3:61";
    std::string w = "0,1.4";
    double xp = 0.0;
    double a = 1.0;
    double b = 0.0;
    int quad_order = 16;
    int panels = 8;
    int directions = 128;
    std::string form = "raw";
    std::string reference = "none";
    double dx = 1e-3;
    double dt = 0.0;
    double cfl = 0.9;
    int levels = 3;
    double k_max = 40.0;
    double dk = 0.1;
    std::string lambdas = "0.5,0.1,0.01";
    std::string suite = "all";
    std::string out;
    std::string format = "csv";
    bool no_timestamp = false;
};

CompositeRule make_rule(const Options& o)
{
    if (o.quad_order < kMinSolverOrder) {
        throw ConfigError("--quad-order must be >= " + std::to_string(kMinSolverOrder));
    }
    return CompositeRule(o.quad_order, o.panels);
}

FDConfig make_fd(const Options& o, const Interval& support, const std::vector<double>& times)
{
    const double T = *std::max_element(times.begin(), times.end());
    if (!(T > 0.0)) {
        throw ConfigError("fd reference needs a time > 0");
    }
    if (!(o.cfl > 0.0) || o.cfl > 1.0) {
        throw ConfigError("--cfl must lie in (0, 1]");
    }
    FDConfig cfg = make_fd_config(support, T, o.dx, o.cfl);
    if (o.dt > 0.0) {
        cfg.dt = o.dt;
    }
    cfg.output_times = times;
    validate(cfg, support);
    return cfg;
}

using PointSolver = std::function<double(double t, double X)>;

// Rows t, X, value[, reference, abs_err, rel_err] for the 1-D solvers.
void tabulate_1d(Result& r, const std::vector<double>& times, const std::vector<double>& xs, const PointSolver& solve,
                 const std::optional<SolutionField>& ref)
{
    r.columns = {"t", "X", "value"};
    if (ref) {
        r.columns.insert(r.columns.end(), {"reference", "abs_err", "rel_err"});
        r.notes.push_back("reference: leapfrog; t is the leapfrog step time nearest the request");
        r.notes.push_back("rel_err: abs_err / max over X of |reference| at that t");
    }
    const std::vector<double>& ts = ref ? ref->times : times;
    std::vector<double> values(ts.size() * xs.size(), 0.0);
    parallel_for(values.size(), [&](std::size_t idx) {
        const double t = ts[idx / xs.size()];
        values[idx] = t > 0.0 ? solve(t, xs[idx % xs.size()]) : 0.0;
    });
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double scale = 0.0;
        std::vector<double> refrow(xs.size(), 0.0);
        if (ref) {
            for (std::size_t j = 0; j < xs.size(); ++j) {
                refrow[j] = ref->interpolate(i, xs[j]);
                scale = std::max(scale, std::fabs(refrow[j]));
            }
        }
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const double v = values[i * xs.size() + j];
            std::vector<Json> row{ts[i], xs[j], v};
            if (ref) {
                const double e = std::fabs(v - refrow[j]);
                row.insert(row.end(), {refrow[j], e, scale > 0.0 ? e / scale : e});
            }
            r.rows.push_back(std::move(row));
        }
    }
}

void add_common(CLI::App* sc, Options& o)
{
    sc->add_option("--out", o.out, "Write results to PATH instead of stdout");
    sc->add_option("--format", o.format, "csv or doc (structured JSON document)")->check(CLI::IsMember({"csv", "doc"}));
    sc->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp/wall-time header line");
}

void add_grid(CLI::App* sc, Options& o)
{
    sc->add_option("--t", o.t, "Comma-separated times");
    sc->add_option("--x-grid", o.x_grid, "min:max:count");
}

void add_profile(CLI::App* sc, Options& o)
{
    sc->add_option("--profile", o.profile, "bump:a:b or file:PATH");
}

void add_quad(CLI::App* sc, Options& o)
{
    sc->add_option("--quad-order", o.quad_order, "Gauss-Legendre order per panel");
    sc->add_option("--panels", o.panels, "Panels per integration interval");
}

void add_fd(CLI::App* sc, Options& o)
{
    sc->add_option("--dx", o.dx, "Leapfrog grid spacing");
    sc->add_option("--dt", o.dt, "Leapfrog time step (default cfl * dx)");
    sc->add_option("--cfl", o.cfl, "Courant number for the default time step");
}

std::vector<std::pair<std::string, std::string>> echo(const CLI::App* sc)
{
    std::vector<std::pair<std::string, std::string>> in;
    for (const CLI::Option* opt : sc->get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name == "out" || name == "format" || name == "no-timestamp") {
            continue;
        }
        std::string value;
        if (opt->count() > 0) {
            for (const auto& s : opt->results()) {
                value += (value.empty() ? "" : ",") + s;
            }
        } else {
            value = opt->get_default_str();
        }
        in.emplace_back(name, value);
    }
    return in;
}

int run_verify(const Options& o, Result& r, std::ostream& err)
{
    std::vector<std::string> names;
    if (o.suite == "all") {
        names = verify::suite_names();
    } else {
        names = {o.suite};
    }
    r.columns = {"suite", "check", "measured", "relation", "bound", "spread", "status"};
    r.provenance = "verification";
    bool ok = true;
    for (const auto& n : names) {
        const auto rep = verify::run_suite(n);
        err << (rep.passed() ? "PASS " : "FAIL ") << rep.name << ": " << rep.title << "\n";
        for (const auto& c : rep.checks) {
            const char* rel = c.relation == verify::Relation::at_most    ? "<="
                              : c.relation == verify::Relation::at_least ? ">="
                                                                         : "within";
            r.rows.push_back({rep.name, c.name, c.measured, rel, c.bound, c.spread, c.passed ? "PASS" : "FAIL"});
            err << "    " << verify::describe(c) << "\n";
        }
        for (const auto& note : rep.notes) {
            r.notes.push_back(rep.name + ": " + note);
        }
        ok = ok && rep.passed();
    }
    return ok ? kExitOk : kExitVerify;
}

} // namespace

std::vector<double> parse_grid(const std::string& spec)
{
    const auto parts = split(spec, ':');
    if (parts.size() != 3) {
        throw ConfigError("--x-grid: expected min:max:count, got '" + spec + "'");
    }
    const double lo = require_number(parts[0], "--x-grid");
    const double hi = require_number(parts[1], "--x-grid");
    const double cnt = require_number(parts[2], "--x-grid");
    if (cnt < 1.0 || cnt != std::floor(cnt) || cnt > 1e7) {
        throw ConfigError("--x-grid: count must be a positive integer");
    }
    if (cnt > 1.0 && !(hi > lo)) {
        throw ConfigError("--x-grid: need max > min");
    }
    const auto n = static_cast<int>(cnt);
    return n == 1 ? std::vector<double>{lo} : verify::linspace(lo, hi, n);
}

InitialProfile read_profile_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open profile file '" + path + "'");
    }
    std::vector<double> xs;
    std::vector<double> fs;
    std::string line;
    bool first = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line == "\r") {
            continue;
        }
        const auto cols = split(line, ',');
        const auto x = cols.size() == 2 ? to_double(cols[0]) : std::nullopt;
        const auto f = cols.size() == 2 ? to_double(cols[1]) : std::nullopt;
        if (!x || !f) {
            if (first) {
                first = false;
                continue;
            }
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected two numeric columns");
        }
        first = false;
        xs.push_back(*x);
        fs.push_back(*f);
    }
    try {
        return InitialProfile::sampled(std::move(xs), std::move(fs));
    } catch (const std::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

InitialProfile parse_profile(const std::string& spec)
{
    if (spec.rfind("file:", 0) == 0) {
        return read_profile_csv(spec.substr(5));
    }
    const auto parts = split(spec, ':');
    if (parts.size() == 3 && parts[0] == "bump") {
        const double a = require_number(parts[1], "--profile");
        const double b = require_number(parts[2], "--profile");
        if (!(b > a)) {
            throw ConfigError("--profile: bump needs a < b");
        }
        return InitialProfile::bump(a, b);
    }
    throw ConfigError("--profile: expected bump:a:b or file:PATH, got '" + spec + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wave propagation with a Liouville potential: solvers, reductions and verification", "liouwave"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval-kernel", "Kernel argument Z and a J0(Z) + b Y0(Z) on a (t, X) grid");
    eval->add_option("--k", o.k, "Coupling k");
    eval->add_option("--xp", o.xp, "Source point X'");
    eval->add_option("--a", o.a, "J0 coefficient");
    eval->add_option("--b", o.b, "Y0 coefficient");
    add_grid(eval, o);

    auto* solve = app.add_subcommand("solve", "Cauchy problem U_tt = U_XX - k^2 e^{2X} U, U(0) = 0, U_t(0) = f");
    solve->add_option("--k", o.k, "Coupling k");
    solve->add_option("--form", o.form, "raw or regularized")->check(CLI::IsMember({"raw", "regularized"}));
    solve->add_option("--reference", o.reference, "none or fd")->check(CLI::IsMember({"none", "fd"}));

    auto* cst = app.add_subcommand("solve-const", "Constant potential U_tt = U_XX - k^2 U");
    cst->add_option("--k", o.k, "Mass k");
    cst->add_option("--reference", o.reference, "none or fd")->check(CLI::IsMember({"none", "fd"}));

    auto* tel = app.add_subcommand("solve-telegraph", "Telegraph equation v_XX = v_tt + (alpha + beta) v_t + alpha beta v");
    tel->add_option("--alpha", o.alpha, "alpha >= 0");
    tel->add_option("--beta", o.beta, "beta >= 0");
    tel->add_option("--reference", o.reference, "none or fd")->check(CLI::IsMember({"none", "fd"}));

    for (auto* sc : {solve, cst, tel}) {
        add_profile(sc, o);
        add_grid(sc, o);
        add_quad(sc, o);
        add_fd(sc, o);
    }

    auto* hyp = app.add_subcommand("solve-hyperbolic", "u_tt = y^2 (u_xx + u_yy) + u/4 on the upper half-plane");
    hyp->add_option("--profile", o.profile, "x factor g: bump:a:b or file:PATH");
    hyp->add_option("--profile-y", o.profile_y, "y factor h: bump:a:b or file:PATH (support in y > 0)");
    hyp->add_option("--w", o.w, "Evaluation point X,Y");
    hyp->add_option("--t", o.t, "Comma-separated times");
    hyp->add_option("--directions", o.directions, "Directions of the polar rule");
    hyp->add_option("--reference", o.reference, "none or fourier")->check(CLI::IsMember({"none", "fourier"}));
    hyp->add_option("--k-max", o.k_max, "Fourier reference: frequency cutoff");
    hyp->add_option("--dk", o.dk, "Fourier reference: frequency spacing");
    add_quad(hyp, o);

    auto* ver = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suites = verify::suite_names();
    suites.insert(suites.begin(), "all");
    ver->add_option("--suite", o.suite, "Suite name or all")->check(CLI::IsMember(suites));

    auto* lim = app.add_subcommand("limit-study", "Kernel gap to the constant-potential kernel under rescaling");
    lim->add_option("--k", o.k, "Coupling k");
    lim->add_option("--lambdas", o.lambdas, "Strictly decreasing positive scales");

    auto* conv = app.add_subcommand("convergence", "Leapfrog vs quadrature under dx halving");
    conv->add_option("--k", o.k, "Coupling k");
    conv->add_option("--levels", o.levels, "Number of dx levels");
    add_profile(conv, o);
    add_grid(conv, o);
    add_quad(conv, o);
    conv->add_option("--dx", o.dx, "Coarsest grid spacing");
    conv->add_option("--cfl", o.cfl, "Courant number");

    auto* prof = app.add_subcommand("profile", "Sample a profile on a grid as an (X, f) CSV");
    add_profile(prof, o);
    prof->add_option("--x-grid", o.x_grid, "min:max:count");

    for (auto* sc : {eval, solve, cst, tel, hyp, ver, lim, conv, prof}) {
        add_common(sc, o);
    }

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    CLI::App* sc = app.get_subcommands().front();
    Result r;
    r.command = sc->get_name();
    r.inputs = echo(sc);
    int status = kExitOk;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (sc == eval) {
            const auto ts = parse_times(o.t);
            const auto xs = parse_grid(o.x_grid);
            const PotentialParams params{o.k};
            r.provenance = to_string(Provenance::closed_form);
            r.columns = {"t", "X", "Xp", "Z", "value"};
            r.notes.push_back("outside the closed cone |X - Xp| <= t: Z = nan, value = 0");
            for (const double t : ts) {
                for (const double X : xs) {
                    const SpacetimePoint p{t, X, o.xp};
                    if (inside_cone(p)) {
                        r.rows.push_back({t, X, o.xp, kernel_argument(p, params).Z, wave_kernel(p, params, o.a, o.b)});
                    } else {
                        r.rows.push_back({t, X, o.xp, std::nan(""), 0.0});
                    }
                }
            }
        } else if (sc == solve || sc == cst || sc == tel) {
            const auto f = parse_profile(o.profile);
            const auto ts = parse_times(o.t);
            const auto xs = parse_grid(o.x_grid);
            const auto quad = make_rule(o);
            PointSolver point;
            std::optional<SolutionField> ref;
            std::optional<FDConfig> cfg;
            if (o.reference == "fd") {
                cfg = make_fd(o, f.support(), ts);
            }
            if (sc == solve) {
                const PotentialParams params{o.k};
                const bool reg = o.form == "regularized";
                r.provenance = to_string(reg ? Provenance::regularized : Provenance::quadrature);
                point = [&, params, reg](double t, double X) {
                    return reg ? solve_cauchy_regularized(params, f, t, X, quad) : solve_cauchy(params, f, t, X, quad);
                };
                if (cfg) {
                    const double k2 = o.k * o.k;
                    ref = fd_wave_solve([k2](double X) { return k2 * std::exp(2.0 * X); }, f, *cfg);
                }
            } else if (sc == cst) {
                r.provenance = to_string(Provenance::quadrature);
                point = [&](double t, double X) { return constant_potential_solve(o.k, f, t, X, quad); };
                if (cfg) {
                    const double k2 = o.k * o.k;
                    ref = fd_wave_solve([k2](double) { return k2; }, f, *cfg);
                }
            } else {
                const TelegraphParams params{o.alpha, o.beta};
                validate(params);
                r.provenance = to_string(Provenance::quadrature);
                point = [&, params](double t, double X) { return telegraph_solve(params, f, t, X, quad); };
                if (cfg) {
                    ref = fd_telegraph_solve(params, f, *cfg);
                }
            }
            tabulate_1d(r, ts, xs, point, ref);
        } else if (sc == hyp) {
            const auto g = parse_profile(o.profile);
            const auto h = parse_profile(o.profile_y);
            const auto wv = parse_list(o.w, "--w");
            if (wv.size() != 2) {
                throw ConfigError("--w: expected X,Y");
            }
            const HyperbolicPoint w{wv[0], wv[1]};
            validate(w);
            const auto ts = parse_times(o.t);
            if (o.directions < 4) {
                throw ConfigError("--directions must be >= 4");
            }
            const PolarQuadrature pq{make_rule(o), o.directions};
            const auto f = HyperbolicProfile::separable(g, h);
            const bool fourier = o.reference == "fourier";
            if (fourier && (!(o.k_max > 0.0) || !(o.dk > 0.0) || o.dk > o.k_max)) {
                throw ConfigError("--k-max and --dk must be > 0 with dk <= k-max");
            }
            r.provenance = to_string(Provenance::quadrature);
            r.columns = {"t", "x", "y", "value"};
            if (fourier) {
                r.columns.insert(r.columns.end(), {"reference", "abs_err", "rel_err"});
                r.notes.push_back("reference: Fourier route in x; rel_err = abs_err / |reference|");
            }
            for (const double t : ts) {
                const double u = t > 0.0 ? hyperbolic_solve(f, t, w, pq) : 0.0;
                std::vector<Json> row{t, w.x, w.y, u};
                if (fourier) {
                    const double v = t > 0.0 ? hyperbolic_fourier_check(f, t, w, {o.k_max, o.dk}, make_rule(o)) : 0.0;
                    const double e = std::fabs(u - v);
                    row.insert(row.end(), {v, e, v != 0.0 ? e / std::fabs(v) : e});
                }
                r.rows.push_back(std::move(row));
            }
        } else if (sc == ver) {
            status = run_verify(o, r, err);
        } else if (sc == lim) {
            ScalingStudy study{parse_list(o.lambdas, "--lambdas"), default_scaling_samples(), o.k};
            r.provenance = to_string(Provenance::closed_form);
            r.columns = {"lambda", "gap"};
            r.notes.push_back("samples: t in {0.5, 1}, X in {-0.2, 0, 0.2}, X' in {-0.1, 0.1}");
            const auto gaps = scaling_limit_gap(study);
            for (std::size_t i = 0; i < gaps.size(); ++i) {
                r.rows.push_back({study.lambdas[i], gaps[i]});
            }
        } else if (sc == conv) {
            const auto f = parse_profile(o.profile);
            const auto ts = parse_times(o.t);
            const auto xs = parse_grid(o.x_grid);
            const auto quad = make_rule(o);
            if (o.levels < 2 || o.levels > 8) {
                throw ConfigError("--levels must lie in [2, 8]");
            }
            const PotentialParams params{o.k};
            const double k2 = o.k * o.k;
            r.provenance = to_string(Provenance::fd_oracle);
            r.columns = {"dx", "t", "rel_linf", "ratio"};
            r.notes.push_back("rel_linf: max |fd - quadrature| / max |quadrature| over the X grid");
            r.notes.push_back("ratio: rel_linf at the previous (coarser) dx divided by this one");
            Options lo = o;
            std::vector<double> prev;
            for (int l = 0; l < o.levels; ++l) {
                const auto cfg = make_fd(lo, f.support(), ts);
                const auto fd = fd_wave_solve([k2](double X) { return k2 * std::exp(2.0 * X); }, f, cfg);
                std::vector<double> errs;
                for (std::size_t i = 0; i < fd.times.size(); ++i) {
                    double num_e = 0.0;
                    double den = 0.0;
                    for (const double X : xs) {
                        const double q = fd.times[i] > 0.0 ? solve_cauchy(params, f, fd.times[i], X, quad) : 0.0;
                        num_e = std::max(num_e, std::fabs(fd.interpolate(i, X) - q));
                        den = std::max(den, std::fabs(q));
                    }
                    const double e = den > 0.0 ? num_e / den : num_e;
                    errs.push_back(e);
                    r.rows.push_back({lo.dx, fd.times[i], e, prev.empty() ? std::nan("") : prev[i] / e});
                }
                prev = errs;
                lo.dx *= 0.5;
            }
        } else if (sc == prof) {
            const auto f = parse_profile(o.profile);
            const auto xs = parse_grid(o.x_grid);
            r.provenance = "profile";
            r.columns = {"X", "f"};
            for (const double X : xs) {
                r.rows.push_back({X, f(X)});
            }
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\nRun '" << r.command << " --help' for usage.\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\nRun '" << r.command << " --help' for usage.\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::optional<double> stamp = o.no_timestamp ? std::nullopt : std::optional<double>(wall);

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            err << "error: cannot open '" << o.out << "' for writing\n";
            return kExitConfig;
        }
    }
    std::ostream& os = o.out.empty() ? out : file;
    if (o.format == "doc") {
        write_doc(r, stamp, os);
    } else {
        write_csv(r, stamp, os);
    }
    return status;
}

} // namespace liouwave::cli
