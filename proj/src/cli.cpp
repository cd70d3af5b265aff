#include "polyharm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "polyharm/dirichlet.hpp"
#include "polyharm/entire.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/fischer.hpp"
#include "polyharm/format.hpp"
#include "polyharm/json_io.hpp"
#include "polyharm/spectral.hpp"
#include "polyharm/verify.hpp"

namespace polyharm::cli {

namespace {

using json_io::Json;

enum class LogLevel { Error, Info, Debug };

LogLevel log_level_from_env() {
    const char* value = std::getenv("POLYHARM_LOG");
    if (value == nullptr) return LogLevel::Error;
    const std::string v = value;
    if (v == "debug" || v == "2") return LogLevel::Debug;
    if (v == "info" || v == "1") return LogLevel::Info;
    return LogLevel::Error;
}

class Log {
public:
    Log(std::ostream& err, LogLevel level) : err_(err), level_(level) {}
    void info(const std::string& msg) const {
        if (level_ >= LogLevel::Info) err_ << "[info] " << msg << "\n";
    }
    void debug(const std::string& msg) const {
        if (level_ >= LogLevel::Debug) err_ << "[debug] " << msg << "\n";
    }
    void error(const std::string& msg) const { err_ << "error: " << msg << "\n"; }

private:
    std::ostream& err_;
    LogLevel level_;
};

/// Bad input: unreadable file, malformed JSON, invalid problem.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Json read_json(const std::string& path) { return json_io::parse(read_file(path)); }

Execution execution_for(bool serial) { return serial ? Execution::Serial : Execution::Parallel; }

struct Outcome {
    int code = kOk;
    Json result;
};

struct Common {
    std::string output;
    std::string envelope;
    bool serial = false;
    std::uint64_t seed = kDefaultSeed;
};

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
    std::string problem;
    std::string data;
    int truncation = -1;
    std::string tail_csv;
    bool no_order = false;
};

Outcome decompose(const DecomposeArgs& a, const Common& c, const Log& log) {
    const auto problem = json_io::problem_from_json(read_json(a.problem));
    const Json data = read_json(a.data);
    const bool series_route = a.truncation >= 0 || (data.is_object() && data.contains("parts"));
    if (!series_route) {
        const auto f = json_io::polynomial_from_json(data);
        if (f.dimension() != problem.dimension) throw DimensionMismatch(f.dimension(), problem.dimension);
        const auto result = decompose_recursive(problem, f);
        log.info("polynomial decomposition, exact = " + std::string(result.exact() ? "true" : "false"));
        return {result.exact() ? kOk : kCertificateFailure, json_io::to_json(result)};
    }
    auto series = json_io::series_or_polynomial_from_json(data, a.truncation);
    if (a.truncation > series.truncation()) series = entire::extend(series, a.truncation);
    if (series.dimension() != problem.dimension) throw DimensionMismatch(series.dimension(), problem.dimension);
    entire::DecomposeOptions options;
    options.execution = execution_for(c.serial);
    options.estimate_order = !a.no_order && series.truncation() >= 8;
    options.order.sampling.seed = c.seed;
    const auto result = entire::decompose_entire(problem, series, options);
    for (const auto& w : result.warnings) log.info("warning: " + w);
    if (!a.tail_csv.empty()) write_file(a.tail_csv, entire::tail_to_csv(result.tail));
    return {result.exact() ? kOk : kCertificateFailure, json_io::to_json(result)};
}

// ---------------------------------------------------------------- dirichlet

struct DirichletArgs {
    std::string request;
    int truncation = -1;
    std::string csv;
    std::string tail_csv;
    std::size_t samples = 512;
};

Outcome dirichlet_solve(const DirichletArgs& a, const Common& c, const Log& log) {
    const Json request = read_json(a.request);
    if (!request.is_object() || !request.contains("domain") || !request.contains("data")) {
        throw json_io::JsonFormatError("request needs \"domain\" and \"data\"");
    }
    const auto spec = json_io::domain_from_json(request.at("domain"));
    int truncation = a.truncation;
    if (truncation < 0 && request.contains("truncation")) truncation = request.at("truncation").get<int>();
    auto data = json_io::series_or_polynomial_from_json(request.at("data"), truncation);
    if (truncation > data.truncation()) data = entire::extend(data, truncation);
    if (data.dimension() != spec.dimension) throw DimensionMismatch(data.dimension(), spec.dimension);

    dirichlet::SolveOptions options;
    options.window.samples = a.samples;
    options.execution = execution_for(c.serial);
    options.estimate_order = data.truncation() >= 8;
    const auto solution = dirichlet::solve(spec, data, options);
    log.info("boundary residual " + format_double(solution.residual.max_residual) + " over " +
             std::to_string(solution.residual.samples) + " samples");
    for (const auto& w : solution.decomposition.warnings) log.info("warning: " + w);
    if (!a.csv.empty()) {
        write_file(a.csv, dirichlet::boundary_csv(spec, data.truncated(), solution.decomposition.remainder.truncated(),
                                                  options.window));
    }
    if (!a.tail_csv.empty()) write_file(a.tail_csv, entire::tail_to_csv(solution.decomposition.tail));
    Json result = json_io::to_json(solution);
    result["domain"] = json_io::to_json(spec);
    return {solution.decomposition.exact() ? kOk : kCertificateFailure, result};
}

// --------------------------------------------------------------- bound-scan

struct BoundScanArgs {
    int m_max = 200;
    double tolerance = 1e-12;
};

Outcome bound_scan(const BoundScanArgs& a, const Common& c, std::ostream& out, const Log& log) {
    if (a.m_max < 0) throw InputError("--m-max must be non-negative");
    const auto reports = spectral::verify_main_inequality(a.m_max, execution_for(c.serial), a.tolerance);
    const std::string csv = spectral::reports_to_csv(reports);
    if (c.output.empty()) {
        out << csv;
    } else {
        write_file(c.output, csv);
    }
    double worst = reports.front().margin;
    for (const auto& r : reports) worst = std::min(worst, r.margin);
    log.info(std::to_string(reports.size()) + " degrees, smallest margin " + format_double(worst));
    return {kOk, {{"rows", reports.size()}, {"min_margin", worst}}};
}

// -------------------------------------------------------------------- order

struct OrderArgs {
    std::string data;
    int truncation = -1;
    std::size_t samples = 8192;
    bool certified = false;
};

Outcome order(const OrderArgs& a, const Common& c, const Log& log) {
    auto series = json_io::series_or_polynomial_from_json(read_json(a.data), a.truncation);
    if (a.truncation > series.truncation()) series = entire::extend(series, a.truncation);
    entire::OrderOptions options;
    options.sampled = !a.certified;
    options.sampling.sphere_samples = a.samples;
    options.sampling.seed = c.seed;
    options.execution = execution_for(c.serial);
    try {
        const auto est = entire::order_estimate(series, options);
        log.info("order " + format_double(est.order) + " by " + est.method);
        return {kOk, json_io::to_json(est)};
    } catch (const AllZeroTail& e) {
        log.info(e.what());
        return {kOk, {{"order", 0.0}, {"type", nullptr}, {"method", "zero-tail"}, {"note", e.what()}}};
    }
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
    bool quick = false;
};

Outcome verify_suite(const VerifyArgs& a, const Common& c, std::ostream& out) {
    verify::VerifyOptions options;
    options.seed = c.seed;
    options.execution = execution_for(c.serial);
    if (a.quick) {
        options.spectral_m_max = 60;
        options.random_decompositions = 60;
        options.series_instances = 30;
        options.norm_bound_samples = 30;
        options.sine_n_max = 100000;
    }
    const auto results = verify::run_suite(options);
    out << verify::format_table(results);
    bool all = true;
    Json rows = Json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        rows.push_back({{"check", r.label}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return {all ? kOk : kCertificateFailure, {{"checks", rows}}};
}

// ---------------------------------------------------------- chebyshev-check

struct ChebyshevArgs {
    int n = 16;
    bool show = false;
};

Outcome chebyshev_check(const ChebyshevArgs& a, std::ostream& out) {
    if (a.n < 1) throw InputError("--n must be at least 1");
    int first_failure = 0;
    for (int n = 1; n <= a.n && first_failure == 0; ++n) {
        if (!spectral::chebyshev_identity_check(n)) first_failure = n;
    }
    if (a.show) {
        out << "det(A_n - lI) = " << spectral::to_string(spectral::characteristic_polynomial_by_determinant(a.n)) << "\n";
        out << "2T_n(-l/2)    = " << spectral::to_string(spectral::scaled_chebyshev(a.n)) << "\n";
    }
    const std::string identity = "det(A_n−λI) = 2T_n(−λ/2)";
    if (first_failure == 0) {
        out << "PASS " << identity << " for n = 1.." << a.n << "\n";
        return {kOk, {{"n_max", a.n}, {"identity_holds", true}}};
    }
    out << "FAIL " << identity << " at n = " << first_failure << "\n";
    return {kCertificateFailure, {{"n_max", a.n}, {"identity_holds", false}, {"first_failure", first_failure}}};
}

std::string status_name(int code) {
    switch (code) {
        case kOk: return "ok";
        case kCertificateFailure: return "certificate_failure";
        case kParseError: return "parse_error";
        default: return "internal_singularity";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const Log log(err, log_level_from_env());
    CLI::App app{"Exact polynomial division by quadrics and harmonic remainders"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common common;
    auto add_common = [&](CLI::App* sub, bool json_output) {
        sub->add_option("--output", common.output, json_output ? "Result JSON path (default stdout)" : "Output path");
        sub->add_option("--envelope", common.envelope, "Also write the JSON result envelope here");
        sub->add_flag("--serial", common.serial, "Use the serial reference kernels");
        sub->add_option("--seed", common.seed, "Seed for all sampling")->capture_default_str();
    };

    DecomposeArgs dec;
    auto* dec_cmd = app.add_subcommand("decompose", "Split data f = P q + h with Delta^k h = 0");
    dec_cmd->add_option("--problem", dec.problem, "Problem JSON (Fischer problem, {polynomial, k}, or domain)")->required();
    dec_cmd->add_option("--data", dec.data, "Data JSON (polynomial or series)")->required();
    dec_cmd->add_option("--truncation", dec.truncation, "Treat the data as a series truncated at N");
    dec_cmd->add_option("--tail-csv", dec.tail_csv, "Write M,norm_GM,bound_shape rows here");
    dec_cmd->add_flag("--no-order", dec.no_order, "Skip the order estimate");
    add_common(dec_cmd, true);

    DirichletArgs dir;
    auto* dir_cmd = app.add_subcommand("dirichlet", "Solve a Dirichlet problem on a quadric domain");
    dir_cmd->add_option("--request", dir.request, "Request JSON {domain, data, truncation}")->required();
    dir_cmd->add_option("--truncation", dir.truncation, "Override the request truncation");
    dir_cmd->add_option("--csv", dir.csv, "Write parameter,f,h,abs_diff boundary rows here");
    dir_cmd->add_option("--tail-csv", dir.tail_csv, "Write M,norm_GM,bound_shape rows here");
    dir_cmd->add_option("--samples", dir.samples, "Boundary samples per piece")->capture_default_str();
    add_common(dir_cmd, true);

    BoundScanArgs scan;
    auto* scan_cmd = app.add_subcommand("bound-scan", "Minimum eigenvalues of x2^2 against the lower bound");
    scan_cmd->add_option("--m-max", scan.m_max, "Largest degree")->capture_default_str();
    scan_cmd->add_option("--tolerance", scan.tolerance, "Allowed negative margin")->capture_default_str();
    add_common(scan_cmd, false);

    OrderArgs ord;
    auto* ord_cmd = app.add_subcommand("order", "Estimate order and type of a series");
    ord_cmd->add_option("--data", ord.data, "Series JSON")->required();
    ord_cmd->add_option("--truncation", ord.truncation, "Extend a generated series to N");
    ord_cmd->add_option("--samples", ord.samples, "Sphere samples per degree for d >= 3")->capture_default_str();
    ord_cmd->add_flag("--certified", ord.certified, "Use certified sup bounds instead of sampling");
    add_common(ord_cmd, true);

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run the invariant suite and print a PASS/FAIL table");
    ver_cmd->add_flag("--quick", ver.quick, "Smaller sample counts");
    add_common(ver_cmd, false);

    ChebyshevArgs cheb;
    auto* cheb_cmd = app.add_subcommand("chebyshev-check", "Exact characteristic polynomial identity up to n");
    cheb_cmd->add_option("--n", cheb.n, "Largest size")->capture_default_str();
    cheb_cmd->add_flag("--show", cheb.show, "Print both polynomials at n");
    add_common(cheb_cmd, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        log.error(e.what());
        return kParseError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const bool json_output = command == "decompose" || command == "dirichlet" || command == "order";
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    std::string error;
    try {
        if (command == "decompose") outcome = decompose(dec, common, log);
        else if (command == "dirichlet") outcome = dirichlet_solve(dir, common, log);
        else if (command == "bound-scan") outcome = bound_scan(scan, common, out, log);
        else if (command == "order") outcome = order(ord, common, log);
        else if (command == "verify") outcome = verify_suite(ver, common, out);
        else outcome = chebyshev_check(cheb, out);
    } catch (const SingularFischerOperator& e) {
        outcome.code = kInternalSingularity;
        error = e.what();
    } catch (const IllConditionedGram& e) {
        outcome.code = kInternalSingularity;
        error = e.what();
    } catch (const BoundViolated& e) {
        outcome.code = kCertificateFailure;
        error = e.what();
    } catch (const InputError& e) {
        outcome.code = kParseError;
        error = e.what();
    } catch (const json_io::JsonFormatError& e) {
        outcome.code = kParseError;
        error = e.what();
    } catch (const nlohmann::json::exception& e) {
        outcome.code = kParseError;
        error = std::string("malformed input: ") + e.what();
    } catch (const std::invalid_argument& e) {
        outcome.code = kParseError;
        error = e.what();
    } catch (const std::exception& e) {
        outcome.code = kInternalSingularity;
        error = std::string("internal error: ") + e.what();
    }
    log.info(command + " finished in " +
             format_double(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) + " s");
    if (!error.empty()) log.error(error);

    Json envelope{{"command", command}, {"status", status_name(outcome.code)}, {"exit_code", outcome.code}};
    if (error.empty()) {
        envelope["result"] = outcome.result;
    } else {
        envelope["error"] = error;
    }
    const std::string text = json_io::dump(envelope);
    try {
        if (json_output) {
            if (common.output.empty()) {
                out << text;
            } else {
                write_file(common.output, text);
            }
        }
        if (!common.envelope.empty()) write_file(common.envelope, text);
    } catch (const std::exception& e) {
        log.error(e.what());
        return kInternalSingularity;
    }
    return outcome.code;
}

}  // namespace polyharm::cli
