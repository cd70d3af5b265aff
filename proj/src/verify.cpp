#include "polyharm/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "polyharm/dirichlet.hpp"
#include "polyharm/entire.hpp"
#include "polyharm/fischer.hpp"
#include "polyharm/format.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/sphere.hpp"
#include "polyharm/spectral.hpp"

namespace polyharm::verify {

namespace {

using Check = std::function<std::string()>;  // returns a detail string, throws on failure

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

CheckResult run_check(const std::string& label, const Check& check) {
    CheckResult r{label, false, "", 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
        r.detail = check();
        r.passed = true;
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

LeadingFamily family_for(int i) { return static_cast<LeadingFamily>(i % 3); }

std::string polynomial_algebra(Rng& rng) {
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + trial % 2;
        const auto f = random_polynomial(rng, d, 6);
        const auto a = random_polynomial(rng, d, 2);
        const auto b = random_polynomial(rng, d, 2);
        require(apply_operator(a * b, f) == apply_operator(a, apply_operator(b, f)), "operator composition");
        require(apply_operator(Polynomial(HomogeneousPolynomial::norm_squared(d)), f) == f.laplacian(),
                "|x|^2 as an operator is the Laplacian");
        const auto g = random_polynomial(rng, d, 8);
        require(fischer_inner_product(a * f, g) == fischer_inner_product(f, apply_operator(a, g)),
                "multiplication and differentiation are adjoint");
    }
    return "40 random triples";
}

std::string gauss(Rng& rng) {
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 2 + trial % 2;
        const auto f = random_homogeneous(rng, d, trial % 9);
        const auto dec = sphere::gauss_decompose(f);
        require(dec.reassemble() == f, "pieces do not reassemble");
        for (const auto& h : dec.harmonics) require(h.laplacian().is_zero(), "piece is not harmonic");
    }
    const auto f = sphere::gauss_decompose(HomogeneousPolynomial::variable(2, 0).power(2));
    require(f.harmonics.size() == 2, "x1^2 should split in two pieces");
    return "30 random, degrees <= 8";
}

std::string circle_harmonics() {
    std::vector<sphere::CircleHarmonic> basis;
    for (int kappa = 0; kappa <= 12; ++kappa) {
        auto pair = sphere::circle_harmonic_basis(kappa);
        basis.push_back(pair.cosine);
        if (!pair.sine.is_zero()) basis.push_back(pair.sine);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Rational expected = i == j ? 1 : 0;
            require(sphere::harmonic_inner_product(basis[i], basis[j]).squared() == expected,
                    "Gram entry " + std::to_string(i) + "," + std::to_string(j));
        }
    }
    return std::to_string(basis.size()) + " harmonics, exact Gram = I";
}

std::string spectral_bound(const VerifyOptions& o) {
    const auto reports = spectral::verify_main_inequality(o.spectral_m_max, o.execution);
    double worst = reports.front().margin;
    for (const auto& r : reports) worst = std::min(worst, r.margin);
    return std::to_string(reports.size()) + " degrees, smallest margin " + format_double(worst);
}

std::string even_sharp(int n_max) {
    const auto P = HomogeneousPolynomial::variable(2, 1).power(2);
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double exact = std::pow(std::sin(M_PI / (4.0 * n + 4.0)), 2);
        const double direct = spectral::min_quadratic_form_eigenvalue(P, 2 * n).min_eigenvalue;
        const double via_tridiagonal = spectral::even_min_eigenvalue_via_chebyshev(n);
        worst = std::max({worst, std::abs(direct - exact), std::abs(via_tridiagonal - exact)});
        require(worst <= 1e-9, "degree " + std::to_string(2 * n));
        require(exact >= spectral::even_degree_constant(n) - 1e-15, "sharp constant above the exact value");
    }
    return "max error " + format_double(worst);
}

std::string chebyshev(int n_max) {
    for (int n = 1; n <= n_max; ++n) require(spectral::chebyshev_identity_check(n), "n = " + std::to_string(n));
    return "recurrence and determinant routes, n = 1.." + std::to_string(n_max);
}

std::string sine(const VerifyOptions& o) {
    const auto scan = spectral::sine_bound_check(o.sine_n_max, o.execution);
    require(scan.violations == 0, std::to_string(scan.violations) + " violations");
    return std::to_string(scan.checked) + " values";
}

std::string random_decompositions(Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        const int d = 2 + i % 2;
        const auto problem = random_fischer_problem(rng, d, family_for(i), i % 2 == 0);
        const auto f = random_polynomial(rng, d, 10);
        const auto result = decompose_recursive(problem, f);
        require(result.exact(), "instance " + std::to_string(i));
    }
    return std::to_string(count) + " exact certificates";
}

std::string series_vs_recursive(Rng& rng, int count) {
    int deepest = 0;
    for (int i = 0; i < count; ++i) {
        const auto problem = random_fischer_problem(rng, 2, family_for(i), true);
        const FischerOperator op(problem);
        const auto f_m = random_nonzero_homogeneous(rng, 2, 2 + i % 9);
        SeriesTrace trace;
        const auto q = decompose_series_formula(op, f_m, &trace);
        require(q == decompose_recursive(op, Polynomial(f_m)).quotient, "instance " + std::to_string(i));
        require(trace.max_layers <= trace.layer_bound + 1, "layer count above bound");
        deepest = std::max(deepest, trace.max_layers);
    }
    return std::to_string(count) + " instances, deepest tuple " + std::to_string(deepest);
}

std::string norm_bound(Rng& rng, int count) {
    FischerProblem problem;
    problem.dimension = 2;
    problem.leading = HomogeneousPolynomial::variable(2, 1).power(2);
    const FischerOperator op(problem);
    std::uniform_int_distribution<int> degree(2, 20);
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        const int m = degree(rng);
        const auto record = operator_norm_bound(op, m, spectral::paper_bound_interval(m - 2), 1, rng);
        worst = std::max(worst, record.worst_ratio / record.allowed_ratio);
    }
    return std::to_string(count) + " samples, worst ratio to the bound " + format_double(worst);
}

std::string dirichlet_closed_forms(Execution execution) {
    using dirichlet::DomainSpec;
    const int d = 2;
    const auto x1 = Polynomial::variable(d, 0);
    const auto x2 = Polynomial::variable(d, 1);
    const Polynomial f = x1 * x1;
    dirichlet::SolveOptions options;
    options.execution = execution;
    options.estimate_order = false;

    const auto disk = dirichlet::solve(DomainSpec::ellipsoid({1, 1}), f, options);
    const Polynomial disk_h = Polynomial::constant(d, Rational(1, 2)) + (x1 * x1 - x2 * x2) * Rational(1, 2);
    require(disk.decomposition.exact() && disk.decomposition.remainder.truncated() == disk_h, "disk remainder");
    require(disk.residual.max_residual <= 1e-10, "disk boundary residual");

    const auto parabola = dirichlet::solve(DomainSpec::parabola(1), f, options);
    require(parabola.decomposition.exact() && parabola.decomposition.remainder.truncated() == x1 * x1 - x2 * x2 + x1,
            "parabola remainder");
    require(parabola.residual.max_residual <= 1e-10, "parabola boundary residual");
    return "boundary residuals " + format_double(disk.residual.max_residual) + ", " +
           format_double(parabola.residual.max_residual);
}

std::string strip_witness() {
    const auto w = dirichlet::nonuniqueness_witness(dirichlet::DomainSpec::strip(1), 16);
    require(w.data_harmonic, "data not harmonic");
    require(w.pipeline_exact, "pipeline certificate");
    require(w.formal_exact_through_truncation, "formal certificate");
    require(w.differ, "splittings coincide");
    return "N = 16, two distinct exact splittings";
}

std::string order_estimator(const VerifyOptions& o) {
    entire::OrderOptions options;
    options.execution = o.execution;
    std::ostringstream detail;
    for (double rho : {0.5, 1.0, 2.0}) {
        const auto est = entire::order_estimate(entire::synthetic_order_series(2, 60, rho), options);
        require(std::abs(est.order - rho) <= 0.02 * rho, "synthetic order " + format_double(rho));
        detail << "rho " << format_double(rho) << " -> " << format_double(est.order) << "; ";
    }
    const auto est = entire::order_estimate(entire::exp_series(2, 60), options);
    require(std::abs(est.order - 1.0) <= 0.05, "exp order");
    require(est.type && std::abs(*est.type - 1.0) <= 0.1, "exp type");
    detail << "exp -> " << format_double(est.order) << ", type " << format_double(*est.type);
    return detail.str();
}

std::string serial_parallel(Rng& rng) {
    const auto f = CompiledPolynomial(random_polynomial(rng, 3, 8));
    const auto points = sphere::sphere_sample_points(3, {});
    require(kernels::max_abs(f, points, Execution::Serial) == kernels::max_abs(f, points, Execution::Parallel),
            "max_abs");
    const auto s = kernels::sine_bound_scan(2, 100000, Execution::Serial);
    const auto p = kernels::sine_bound_scan(2, 100000, Execution::Parallel);
    require(s.violations == p.violations && s.min_relative_margin == p.min_relative_margin, "sine scan");
    const auto a = spectral::verify_main_inequality(40, Execution::Serial);
    const auto b = spectral::verify_main_inequality(40, Execution::Parallel);
    for (std::size_t i = 0; i < a.size(); ++i) require(a[i].min_eigenvalue == b[i].min_eigenvalue, "spectral scan");
    return "max_abs, sine scan, spectral scan";
}

}  // namespace

std::vector<CheckResult> run_suite(const VerifyOptions& o) {
    Rng rng(o.seed);
    std::vector<CheckResult> out;
    out.push_back(run_check("operator algebra and Fischer adjointness", [&] { return polynomial_algebra(rng); }));
    out.push_back(run_check("harmonic splitting of homogeneous polynomials", [&] { return gauss(rng); }));
    out.push_back(run_check("circle harmonics orthonormal, frequency <= 12", [] { return circle_harmonics(); }));
    out.push_back(run_check("x2^2 eigenvalue >= pi^2/(4(m+4)^2), m <= " + std::to_string(o.spectral_m_max),
                            [&] { return spectral_bound(o); }));
    out.push_back(run_check("even degree 2n minimum = sin^2(pi/(4n+4)), n <= 60", [] { return even_sharp(60); }));
    out.push_back(run_check("det(A_n - l I) = 2 T_n(-l/2), n <= 16", [] { return chebyshev(16); }));
    out.push_back(run_check("sin(pi/n) >= pi/(n+2), n <= " + std::to_string(o.sine_n_max), [&] { return sine(o); }));
    out.push_back(run_check("random decompositions f = P q + h, Laplacian h = 0",
                            [&] { return random_decompositions(rng, o.random_decompositions); }));
    out.push_back(run_check("iterated series = recursive quotient",
                            [&] { return series_vs_recursive(rng, o.series_instances); }));
    out.push_back(run_check("quotient norm bound for P = x2^2, m <= 20",
                            [&] { return norm_bound(rng, o.norm_bound_samples); }));
    out.push_back(run_check("disk and parabola closed-form solutions", [&] { return dirichlet_closed_forms(o.execution); }));
    out.push_back(run_check("strip data with two exact decompositions", [] { return strip_witness(); }));
    out.push_back(run_check("order and type estimator", [&] { return order_estimator(o); }));
    out.push_back(run_check("serial and parallel kernels agree", [&] { return serial_parallel(rng); }));
    return out;
}

std::string format_table(const std::vector<CheckResult>& results) {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.label.size());
    std::ostringstream out;
    for (const auto& r : results) {
        out << r.label << std::string(width - r.label.size() + 2, ' ') << (r.passed ? "PASS" : "FAIL") << "  "
            << r.detail << "\n";
    }
    return out.str();
}

}  // namespace polyharm::verify
