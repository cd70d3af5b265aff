#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "polyharm/cli.hpp"
#include "polyharm/json_io.hpp"

using namespace polyharm;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path = fs::temp_directory_path() / ("polyharm_test_" + std::to_string(::getpid()));
    TempDir() { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
    std::string read(const std::string& name) const {
        std::ifstream in(path / name);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("polynomial JSON round trip") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_polynomial(rng, 2 + trial % 3, 6, {7, 5, 0.6, trial % 2 == 1});
        const auto j = json_io::to_json(f);
        CHECK(json_io::polynomial_from_json(j) == f);
        const std::string text = json_io::dump(j);
        CHECK(json_io::dump(json_io::parse(text)) == text);
    }
    CHECK(json_io::polynomial_from_json(json_io::parse(R"({"dimension": 2, "text": "x1^2 - 1/2*x2"})")) ==
          parse_polynomial("x1^2 - 1/2*x2", 2));
}

TEST_CASE("series, problem, domain, and result round trips") {
    const auto s = entire::exp_series(2, 12, 1, Rational(2, 3));
    CHECK(json_io::series_from_json(json_io::to_json(s)) == s);
    const auto g = json_io::parse(R"({"dimension": 2, "truncation": 12,
        "generator": {"name": "exp", "params": {"variable": "1", "c": "2/3"}}})");
    CHECK(json_io::series_from_json(g) == s);

    const auto spec = dirichlet::DomainSpec::cylinder({1, Rational(3, 2)}, 3);
    const auto dj = json_io::to_json(spec);
    CHECK(json_io::to_json(json_io::domain_from_json(dj)) == dj);

    const auto problem = problem_from_polynomial(parse_polynomial("x2^2 - x1 + 3", 2), 1);
    const auto pj = json_io::to_json(problem);
    CHECK(json_io::to_json(json_io::problem_from_json(pj)) == pj);

    const auto result = decompose_recursive(problem, parse_polynomial("x1^3 + x2", 2));
    const auto rj = json_io::to_json(result);
    const std::string text = json_io::dump(rj);
    CHECK(json_io::dump(json_io::to_json(json_io::decomposition_from_json(json_io::parse(text)))) == text);

    const auto sol = dirichlet::solve(dirichlet::DomainSpec::ellipsoid({2, 1}), entire::exp_series(2, 20));
    const std::string sol_text = json_io::dump(json_io::to_json(sol));
    CHECK(json_io::dump(json_io::parse(sol_text)) == sol_text);
}

TEST_CASE("schema violations are rejected") {
    using json_io::JsonFormatError;
    using json_io::parse;
    CHECK_THROWS_AS(parse("{"), JsonFormatError);
    CHECK_THROWS_AS(json_io::polynomial_from_json(parse(R"({"terms": []})")), JsonFormatError);
    CHECK_THROWS_AS(json_io::polynomial_from_json(parse(R"({"dimension": 2, "terms": [{"exponents": [1], "re": "1"}]})")),
                    JsonFormatError);
    CHECK_THROWS_AS(json_io::polynomial_from_json(parse(R"({"dimension": 2, "terms": [{"exponents": [1, 0], "re": "x"}]})")),
                    JsonFormatError);
    CHECK_THROWS_AS(json_io::series_from_json(parse(R"({"dimension": 2, "truncation": 1, "parts": []})")), JsonFormatError);
    CHECK_THROWS_AS(json_io::domain_from_json(parse(R"({"kind": "torus"})")), JsonFormatError);
    CHECK_THROWS_AS(json_io::problem_from_json(parse(R"({"dimension": 2, "k": 1, "leading": {"dimension": 2, "text": "x1"}})")),
                    JsonFormatError);
}

TEST_CASE("cli decompose, exit codes, determinism") {
    TempDir dir;
    const auto problem = dir.write("parabola.json", R"({"kind": "parabola", "a": "1"})");
    const auto data = dir.write("f.json", R"({"dimension": 2, "text": "x1^2"})");
    auto r = run({"decompose", "--problem", problem, "--data", data});
    CHECK(r.code == 0);
    const auto envelope = json_io::parse(r.out);
    CHECK(envelope.at("result").at("exact") == true);
    CHECK(json_io::polynomial_from_json(envelope.at("result").at("remainder")) ==
          parse_polynomial("x1^2 - x2^2 + x1", 2));
    CHECK(run({"decompose", "--problem", problem, "--data", data}).out == r.out);
    CHECK(json_io::dump(envelope) == r.out);

    const auto bad = dir.write("bad.json", "{ not json");
    CHECK(run({"decompose", "--problem", problem, "--data", bad}).code == cli::kParseError);
    CHECK(run({"decompose", "--problem", problem, "--data", (dir.path / "missing.json").string()}).code ==
          cli::kParseError);
    CHECK(run({"decompose", "--problem", problem, "--data", data, "--unknown-flag"}).code == cli::kParseError);
    CHECK(run({"frobnicate"}).code == cli::kParseError);

    const auto singular = dir.write("singular.json", R"({"polynomial": {"dimension": 2, "text": "x1^2 - x2^2"}, "k": 1})");
    auto s = run({"decompose", "--problem", singular, "--data", data});
    CHECK(s.code == cli::kInternalSingularity);
    CHECK(s.err.find("singular") != std::string::npos);

    const auto wrong_dim = dir.write("f3.json", R"({"dimension": 3, "text": "x3"})");
    CHECK(run({"decompose", "--problem", problem, "--data", wrong_dim}).code == cli::kParseError);
}

TEST_CASE("cli dirichlet writes CSV files") {
    TempDir dir;
    const auto request = dir.write("req.json", R"({"domain": {"kind": "ellipsoid", "axes": ["1", "1"]},
        "data": {"dimension": 2, "truncation": 12, "generator": {"name": "exp", "params": {"variable": "0", "c": "1"}}}})");
    const auto out = (dir.path / "sol.json").string();
    auto r = run({"dirichlet", "--request", request, "--output", out, "--csv", (dir.path / "b.csv").string(),
                  "--tail-csv", (dir.path / "t.csv").string(), "--samples", "32"});
    CHECK(r.code == 0);
    const auto sol = json_io::parse(dir.read("sol.json"));
    CHECK(sol.at("result").at("exact") == true);
    CHECK(sol.at("result").at("residual_report").at("max_residual").get<double>() < 1e-10);
    const auto csv = dir.read("b.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 33);
    CHECK(dir.read("t.csv").rfind("M,norm_GM,bound_shape", 0) == 0);
}

TEST_CASE("cli bound-scan, order, chebyshev-check") {
    auto scan = run({"bound-scan", "--m-max", "50"});
    CHECK(scan.code == 0);
    CHECK(std::count(scan.out.begin(), scan.out.end(), '\n') == 52);
    CHECK(run({"bound-scan", "--m-max", "50", "--serial"}).out == scan.out);

    auto cheb = run({"chebyshev-check", "--n", "12"});
    CHECK(cheb.code == 0);
    CHECK(cheb.out.rfind("PASS det(A_n−λI) = 2T_n(−λ/2)", 0) == 0);

    TempDir dir;
    const auto data = dir.write("exp.json",
                                R"({"dimension": 2, "truncation": 40, "generator": {"name": "exp", "params": {"variable": "0", "c": "1"}}})");
    auto ord = run({"order", "--data", data});
    CHECK(ord.code == 0);
    const auto est = json_io::parse(ord.out).at("result");
    CHECK(est.at("order").get<double>() == doctest::Approx(1.0).epsilon(0.05));
    CHECK(run({"order", "--data", data}).out == ord.out);

    const auto poly = dir.write("poly.json", R"({"dimension": 2, "text": "x1^3"})");
    auto zero = run({"order", "--data", poly, "--truncation", "12"});
    CHECK(zero.code == 0);
    CHECK(json_io::parse(zero.out).at("result").at("order") == 0.0);
}

TEST_CASE("cli envelope for text commands") {
    TempDir dir;
    const auto env = (dir.path / "env.json").string();
    CHECK(run({"chebyshev-check", "--n", "4", "--envelope", env}).code == 0);
    const auto j = json_io::parse(dir.read("env.json"));
    CHECK(j.at("status") == "ok");
    CHECK(j.at("result").at("identity_holds") == true);
}
