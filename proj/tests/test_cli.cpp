// End-to-end checks of the command-line tool. The binary path arrives via
// the NCWICK_CLI environment variable (set by the ctest fixture); the suite
// skips when it is absent so the test binary stays runnable on its own.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncwick/json_io.hpp"

#include "test_helpers.hpp"

using namespace ncwick;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("NCWICK_CLI");
    return p ? p : "";
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() / "ncwick_cli_test";
    fs::create_directories(dir);
    const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = cli_path() + " " + args + " > " + out.string() + " 2> " + err.string();
    const int rc = std::system(cmd.c_str());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    return {WEXITSTATUS(rc), slurp(out), slurp(err)};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path dir = fs::temp_directory_path() / "ncwick_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p;
}

fs::path write_series(const std::string& name, const NcSeries& s) {
    return write_temp(name, series_to_json(s).dump());
}

const TruncationPolicy kT{3, 4, 0.0};

} // namespace

TEST_SUITE_BEGIN("cli");

#define REQUIRE_CLI()                                        \
    if (cli_path().empty()) {                                \
        MESSAGE("NCWICK_CLI not set; skipping CLI checks"); \
        return;                                              \
    }

TEST_CASE("mul concatenates basis words") {
    REQUIRE_CLI();
    const auto f = write_series("e1.json", NcSeries::basis(Word{1}, kT));
    const auto g = write_series("e2.json", NcSeries::basis(Word{2}, kT));
    const auto r = run("mul " + f.string() + " " + g.string());
    CHECK(r.exit_code == 0);
    const NcSeries prod = series_from_json(nlohmann::json::parse(r.out));
    CHECK(prod == NcSeries::basis(Word{1, 2}, kT));
}

TEST_CASE("mul by the unit returns the series, and runs are byte-identical") {
    REQUIRE_CLI();
    const NcSeries f = NcSeries::from_terms(
        {{Word{2, 1}, Complex{0.125, -3.5}}, {Word{}, Complex{1.0, 0.75}}}, kT);
    const auto one = write_series("one.json", NcSeries::unit(kT));
    const auto fp = write_series("f.json", f);
    const auto r1 = run("mul " + one.string() + " " + fp.string());
    const auto r2 = run("mul " + one.string() + " " + fp.string());
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(series_from_json(nlohmann::json::parse(r1.out)) == f);
}

TEST_CASE("malformed and missing inputs exit 2") {
    REQUIRE_CLI();
    const auto bad = write_temp("bad.json", "{ not json");
    const auto good = write_series("g.json", NcSeries::unit(kT));
    CHECK(run("mul " + bad.string() + " " + good.string()).exit_code == 2);
    CHECK(run("norm /nonexistent/f.json --p 0").exit_code == 2);
    CHECK(run("norm " + good.string()).exit_code == 2); // missing --p
}

TEST_CASE("oversized terms exit 3") {
    REQUIRE_CLI();
    const auto f = write_temp("long.json",
                              R"({"trunc": {"max_len": 1}, )"
                              R"("terms": [{"word": [1,1], "re": 1, "im": 0}]})");
    const auto g = write_series("g2.json", NcSeries::unit(kT));
    const auto r = run("mul " + f.string() + " " + g.string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("norm prints 17 significant digits") {
    REQUIRE_CLI();
    const auto one = write_series("one2.json", NcSeries::unit(kT));
    for (int p : {-2, 0, 3}) {
        const auto r = run("norm " + one.string() + " --p " + std::to_string(p));
        CHECK(r.exit_code == 0);
        CHECK(std::stod(r.out) == 1.0);
    }
    const auto e12 = write_series("e12.json", NcSeries::basis(Word{1, 2}, kT));
    const auto r1 = run("norm " + e12.string() + " --p 1");
    CHECK(std::abs(std::stod(r1.out) - std::sqrt(0.125)) < 1e-15);
    const auto r2 = run("norm " + e12.string() + " --p 2");
    CHECK(std::abs(std::stod(r2.out) - 0.125) < 1e-16);
}

TEST_CASE("vage-const and vage-check") {
    REQUIRE_CLI();
    const auto c = run("vage-const --p 0 --q 2");
    CHECK(c.exit_code == 0);
    CHECK(std::abs(std::stod(c.out) - 1.3032521813941973) < 1e-12);

    CHECK(run("vage-const --p 0 --q 1").exit_code == 2);
    CHECK(run("vage-check --p 0 --q 1 --trials 5").exit_code == 2);

    const auto audit = run("vage-check --p 0 --q 2 --trials 200 --seed 1 "
                           "--trunc-len 5 --max-letter 6");
    CHECK(audit.exit_code == 0);
    CHECK(audit.out.find("violations") != std::string::npos);
    CHECK(audit.out.find("= 0/200") != std::string::npos);

    CHECK(run("vage-check --p 0 --q 2 --trials 0").exit_code == 0);
}

TEST_CASE("invert") {
    REQUIRE_CLI();
    const auto one = write_series("one3.json", NcSeries::unit(kT));
    const auto r = run("invert " + one.string());
    CHECK(r.exit_code == 0);
    CHECK(series_from_json(nlohmann::json::parse(r.out)) == NcSeries::unit(kT));

    const auto bad = write_series("noexp.json", NcSeries::basis(Word{1}, kT));
    const auto r2 = run("invert " + bad.string());
    CHECK(r2.exit_code == 3);
    CHECK(r2.err.find("NotInvertible") != std::string::npos);
}

TEST_CASE("apply honors the radius gate and --force") {
    REQUIRE_CLI();
    const auto phi = write_temp("phi.json",
                                R"({"coeffs": [{"re":1,"im":0},{"re":1,"im":0}], "radius": 1.0})");
    const auto f = write_temp("f2.json",
                              R"({"trunc": {"max_len": 3}, )"
                              R"("terms": [{"word": [], "re": 2, "im": 0}]})");
    const auto r = run("apply " + phi.string() + " " + f.string());
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("RadiusViolation") != std::string::npos);
    const auto rf = run("apply " + phi.string() + " " + f.string() + " --force");
    CHECK(rf.exit_code == 0);
    const NcSeries out = series_from_json(nlohmann::json::parse(rf.out));
    CHECK(out.coeff(Word{}) == Complex{3.0, 0.0}); // 1 + 2
}

TEST_CASE("dm counts deletions") {
    REQUIRE_CLI();
    const auto f = write_series("e11.json", NcSeries::basis(Word{1, 1}, kT));
    const auto r = run("dm " + f.string() + " --m 1");
    CHECK(r.exit_code == 0);
    const NcSeries out = series_from_json(nlohmann::json::parse(r.out));
    CHECK(out.coeff(Word{1}) == Complex{2.0, 0.0});
    CHECK(out.term_count() == 1);
}

TEST_CASE("simulate and realize round trip through files") {
    REQUIRE_CLI();
    // 1x1 system: A = 0.5, B = C = 1, D = 0 => h_k = 0.5^{k-1}.
    const std::string unit_terms = R"([{"word": [], "re": 1, "im": 0}])";
    const std::string half_terms = R"([{"word": [], "re": 0.5, "im": 0}])";
    const std::string trunc = R"({"max_len": 3, "max_letter": 4})";
    auto mat1 = [&](const std::string& terms) {
        return std::string(R"({"rows": 1, "cols": 1, "trunc": )") + trunc +
               R"(, "entries": [[)" + terms + "]]}";
    };
    const auto sys = write_temp("sys.json", std::string("{\"A\": ") + mat1(half_terms) +
                                                ", \"B\": " + mat1(unit_terms) +
                                                ", \"C\": " + mat1(unit_terms) +
                                                ", \"D\": " + mat1("[]") + "}");
    const auto r = run("realize " + sys.string() + " --steps 3");
    REQUIRE(r.exit_code == 0);
    const auto h = matrix_sequence_from_json(nlohmann::json::parse(r.out));
    REQUIRE(h.size() == 4);
    CHECK(h[0].at(0, 0).is_zero());
    CHECK(expectation(h[1].at(0, 0)) == Complex{1.0, 0.0});
    CHECK(expectation(h[2].at(0, 0)) == Complex{0.5, 0.0});
    CHECK(expectation(h[3].at(0, 0)) == Complex{0.25, 0.0});

    const auto h_path = write_temp("h.json", nlohmann::json::parse(r.out).dump());
    const auto u_path = write_temp("u.json", std::string(R"({"sequence": [)") + mat1(unit_terms) + "]}");
    const auto sim = run("simulate " + h_path.string() + " " + u_path.string() + " --steps 4");
    REQUIRE(sim.exit_code == 0);
    const auto y = matrix_sequence_from_json(nlohmann::json::parse(sim.out));
    REQUIRE(y.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(y[k] == h[k]);
}

TEST_CASE("observable verdicts") {
    REQUIRE_CLI();
    const std::string trunc = R"({"max_len": 2, "max_letter": 2})";
    // C = [1 0], A = [[0,1],[0,0]] as constants.
    const std::string c_mat = std::string(R"({"rows": 1, "cols": 2, "trunc": )") + trunc +
                              R"(, "entries": [[[{"word": [], "re": 1, "im": 0}], []]]})";
    const std::string a_mat = std::string(R"({"rows": 2, "cols": 2, "trunc": )") + trunc +
                              R"(, "entries": [[[], [{"word": [], "re": 1, "im": 0}]], [[], []]]})";
    const auto pair = write_temp("ca.json", "{\"C\": " + c_mat + ", \"A\": " + a_mat + "}");
    const auto r = run("observable " + pair.string() + " --steps 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("expectation pair observable: true") != std::string::npos);
    CHECK(r.out.find("kernel recursion trivial:    true") != std::string::npos);

    const auto r1 = run("observable " + pair.string() + " --steps 1");
    CHECK(r1.exit_code == 3);
    CHECK(r1.err.find("PreconditionFailed") != std::string::npos);
}

TEST_CASE("blowup-demo prints an increasing sequence") {
    REQUIRE_CLI();
    const auto r = run("blowup-demo --n 6");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::vector<double> vals;
    double v;
    while (in >> v) vals.push_back(v);
    REQUIRE(vals.size() == 6);
    for (std::size_t i = 1; i < vals.size(); ++i) CHECK(vals[i] > vals[i - 1]);
}

TEST_SUITE_END();
