#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "liouwave/cli.hpp"
#include "liouwave/error.hpp"

namespace fs = std::filesystem;
using liouwave::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    args.insert(args.begin(), "liouwave");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

// Non-comment lines, header first.
std::vector<std::vector<std::string>> table(const std::string& csv)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) {
            cells.push_back(c);
        }
        rows.push_back(cells);
    }
    return rows;
}

fs::path scratch(const std::string& name)
{
    return fs::temp_directory_path() / ("liouwave_test_" + name);
}

} // namespace

TEST_CASE("solve example: 61 rows vanishing outside the cone")
{
    const auto o = call({"solve", "--k", "1", "--profile", "bump:-1:1", "--t", "1", "--x-grid", "-3:3:61"});
    REQUIRE(o.code == 0);
    const auto rows = table(o.out);
    REQUIRE(rows.size() == 62);
    CHECK(rows[0] == std::vector<std::string>{"t", "X", "value"});
    int inside = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double X = std::stod(rows[i][1]);
        const double v = std::stod(rows[i][2]);
        if (std::fabs(X) > 2.0 + 1e-12) {
            CHECK(v == 0.0);
        } else if (std::fabs(X) < 1.9) {
            CHECK(v != 0.0);
            ++inside;
        }
    }
    CHECK(inside > 30);
    CHECK(o.out.find("# generated ") != std::string::npos);
}

TEST_CASE("verify --suite lemma1 reports every identity")
{
    const auto o = call({"verify", "--suite", "lemma1", "--no-timestamp"});
    const auto rows = table(o.out);
    REQUIRE(rows.size() == 5);
    for (const char* name : {"dZ/dX", "d2Z/dX2", "dZ/dt", "d2Z/dt2"}) {
        bool found = false;
        for (const auto& r : rows) {
            found = found || (r.size() == 7 && r[1] == name && (r[6] == "PASS" || r[6] == "FAIL"));
        }
        CHECK_MESSAGE(found, name);
    }
    bool all_pass = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        all_pass = all_pass && rows[i][6] == "PASS";
    }
    CHECK(o.code == (all_pass ? 0 : 2));
    CHECK(o.err.find("lemma1") != std::string::npos);
}

TEST_CASE("verify exit codes")
{
    CHECK(call({"verify", "--suite", "dalembert", "--no-timestamp"}).code == 0);
    CHECK(call({"verify", "--suite", "specfun", "--no-timestamp"}).code == 2);
    CHECK(call({"verify", "--suite", "nonsense"}).code == 1);
}

TEST_CASE("limit-study: three monotone rows")
{
    const auto o = call({"limit-study", "--k", "1", "--lambdas", "0.5,0.1,0.01"});
    REQUIRE(o.code == 0);
    const auto rows = table(o.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"lambda", "gap"});
    CHECK(std::stod(rows[1][1]) > std::stod(rows[2][1]));
    CHECK(std::stod(rows[2][1]) > std::stod(rows[3][1]));
    CHECK(call({"limit-study", "--lambdas", "0.1,0.5"}).code == 1);
}

TEST_CASE("determinism with --no-timestamp")
{
    const std::vector<std::string> args = {"solve", "--k", "2", "--t", "0.5,1.5", "--x-grid", "-2:2:17", "--no-timestamp"};
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto doc = args;
    doc.insert(doc.end(), {"--format", "doc"});
    const auto d1 = call(doc);
    const auto d2 = call(doc);
    CHECK(d1.out == d2.out);
    CHECK(d1.out.find("\"provenance\": \"quadrature\"") != std::string::npos);
    CHECK(d1.out.find("\"inputs\"") != std::string::npos);
    CHECK(d1.out.find("wall_time_s") == std::string::npos);
    CHECK(call({"solve", "--format", "doc"}).out.find("wall_time_s") != std::string::npos);
}

TEST_CASE("sampled profile round trip")
{
    const auto p1 = scratch("p1.csv");
    const auto p2 = scratch("p2.csv");
    const auto o1 = scratch("o1.csv");
    const auto o2 = scratch("o2.csv");
    REQUIRE(call({"profile", "--profile", "bump:-1:1", "--x-grid", "-1.5:1.5:301", "--out", p1.string()}).code == 0);
    REQUIRE(call({"solve", "--profile", "file:" + p1.string(), "--t", "0.7", "--x-grid", "-2:2:21", "--no-timestamp",
                  "--out", o1.string()})
                .code == 0);
    REQUIRE(call({"profile", "--profile", "file:" + p1.string(), "--x-grid", "-1.5:1.5:301", "--out", p2.string()}).code == 0);
    REQUIRE(call({"solve", "--profile", "file:" + p2.string(), "--t", "0.7", "--x-grid", "-2:2:21", "--no-timestamp",
                  "--out", o2.string()})
                .code == 0);
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(table(slurp(p1)) == table(slurp(p2)));
    const auto t1 = table(slurp(o1));
    CHECK(t1 == table(slurp(o2)));
    CHECK(t1.size() == 22);

    // The spline through the samples stays close to the bump itself.
    const auto direct = table(call({"solve", "--t", "0.7", "--x-grid", "-2:2:21"}).out);
    for (std::size_t i = 1; i < t1.size(); ++i) {
        CHECK(std::fabs(std::stod(t1[i][2]) - std::stod(direct[i][2])) <= 1e-6);
    }
    for (const auto& p : {p1, p2, o1, o2}) {
        fs::remove(p);
    }
}

TEST_CASE("profile file parsing")
{
    const auto p = scratch("bad.csv");
    {
        std::ofstream f(p);
        f << "# comment\nX,f\n0,0\n1,0.5\n2,abc\n";
    }
    CHECK_THROWS_AS(liouwave::cli::read_profile_csv(p.string()), liouwave::ConfigError);
    {
        std::ofstream f(p);
        f << "X,f\n0,0\n1,0.5\n2,0\n";
    }
    const auto prof = liouwave::cli::read_profile_csv(p.string());
    CHECK(prof(1.0) == doctest::Approx(0.5));
    CHECK(prof.support().lo == 0.0);
    CHECK(prof.support().hi == 2.0);
    fs::remove(p);
    CHECK_THROWS_AS(liouwave::cli::parse_profile("file:/nonexistent/profile.csv"), liouwave::ConfigError);
    CHECK_THROWS_AS(liouwave::cli::parse_profile("gauss:0:1"), liouwave::ConfigError);
    CHECK_THROWS_AS(liouwave::cli::parse_profile("bump:1:0"), liouwave::ConfigError);
    CHECK(liouwave::cli::parse_grid("-1:1:5").size() == 5);
    CHECK(liouwave::cli::parse_grid("0.5:0.5:1") == std::vector<double>{0.5});
    CHECK_THROWS_AS(liouwave::cli::parse_grid("-1:1"), liouwave::ConfigError);
    CHECK_THROWS_AS(liouwave::cli::parse_grid("-1:1:2.5"), liouwave::ConfigError);
    CHECK_THROWS_AS(liouwave::cli::parse_grid("1:-1:5"), liouwave::ConfigError);
}

TEST_CASE("configuration errors exit with 1")
{
    CHECK(call({}).code == 1);
    CHECK(call({"solve", "--t", "-1"}).code == 1);
    CHECK(call({"solve", "--quad-order", "4"}).code == 1);
    CHECK(call({"solve", "--panels", "0"}).code == 1);
    CHECK(call({"solve", "--format", "xml"}).code == 1);
    CHECK(call({"solve", "--k", "abc"}).code == 1);
    CHECK(call({"solve", "--reference", "fd", "--cfl", "1.5"}).code == 1);
    CHECK(call({"solve", "--reference", "fd", "--dx", "1e-2", "--dt", "2e-2"}).code == 1);
    CHECK(call({"solve-telegraph", "--alpha", "-1"}).code == 1);
    CHECK(call({"solve-hyperbolic", "--w", "0,-1"}).code == 1);
    CHECK(call({"solve-hyperbolic", "--profile-y", "bump:-1:1"}).code == 1);
    CHECK(call({"solve", "--out", "/nonexistent/dir/out.csv"}).code == 1);
    const auto o = call({"solve", "--x-grid", "bad"});
    CHECK(o.code == 1);
    CHECK(o.err.find("error:") != std::string::npos);
    CHECK(call({"solve", "--help"}).code == 0);
}

TEST_CASE("other subcommands")
{
    SUBCASE("eval-kernel")
    {
        const auto rows = table(call({"eval-kernel", "--k", "1", "--t", "1", "--x-grid", "-2:2:5"}).out);
        REQUIRE(rows.size() == 6);
        CHECK(rows[1][3] == "nan");
        CHECK(rows[1][4] == "0");
        CHECK(std::stod(rows[3][4]) < 1.0);
    }
    SUBCASE("solve with leapfrog reference")
    {
        const auto o = call({"solve", "--t", "0.5", "--x-grid", "-2:2:9", "--reference", "fd", "--dx", "2e-3"});
        REQUIRE(o.code == 0);
        const auto rows = table(o.out);
        REQUIRE(rows[0].size() == 6);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(std::stod(rows[i][5]) <= 1e-4);
        }
    }
    SUBCASE("solve-const and solve-telegraph")
    {
        CHECK(call({"solve-const", "--k", "1.5", "--t", "1", "--x-grid", "-2:2:9", "--reference", "fd", "--dx", "2e-3"}).code == 0);
        const auto rows = table(call({"solve-telegraph", "--alpha", "2", "--beta", "0", "--t", "1", "--x-grid", "-2:2:9",
                                      "--reference", "fd", "--dx", "2e-3"})
                                    .out);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(std::stod(rows[i][5]) <= 1e-4);
        }
    }
    SUBCASE("solve-hyperbolic with Fourier reference")
    {
        const auto rows = table(call({"solve-hyperbolic", "--w", "0,1.4", "--t", "1", "--reference", "fourier"}).out);
        REQUIRE(rows.size() == 2);
        CHECK(std::stod(rows[1][6]) <= 1e-4);
    }
    SUBCASE("convergence")
    {
        const auto rows = table(call({"convergence", "--t", "1", "--x-grid", "-2:2:21", "--dx", "4e-3", "--levels", "3"}).out);
        REQUIRE(rows.size() == 4);
        CHECK(std::stod(rows[3][3]) == doctest::Approx(4.0).epsilon(0.1));
    }
}
