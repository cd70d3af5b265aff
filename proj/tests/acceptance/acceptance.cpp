// Acceptance run: one PASS/FAIL line per criterion. Each criterion computes the
// system-under-test value through the library and checks it against an oracle
// built here from first principles.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "polyharm/dirichlet.hpp"
#include "polyharm/entire.hpp"
#include "polyharm/fischer.hpp"
#include "polyharm/sphere.hpp"
#include "polyharm/spectral.hpp"

using namespace polyharm;

namespace {

// Tolerances and budgets, pinned.
constexpr double kSpectralTolerance = 1e-12;
constexpr double kOracleAgreement = 1e-10;
constexpr double kEvenTolerance = 1e-9;
constexpr double kBoundaryTolerance = 1e-10;
constexpr double kSyntheticOrderTolerance = 0.02;
constexpr double kExpOrderTolerance = 0.05;
constexpr double kExpTypeTolerance = 0.10;
constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
    bool passed;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Multiplication by sin^2 t on the restrictions of degree-m homogeneous
// polynomials to the circle, in the orthonormal basis 1/sqrt(2 pi),
// cos(jt)/sqrt(pi), sin(jt)/sqrt(pi), j = m mod 2, ..., m. From
// sin^2 t cos jt = cos jt / 2 - (cos (j+2)t + cos (j-2)t) / 4 and the sine analogue.
double trig_min_eigenvalue(int m) {
    const int p = m % 2;
    std::vector<int> freq;
    for (int j = p; j <= m; j += 2) freq.push_back(j);
    const int nc = static_cast<int>(freq.size());
    const int ns = p == 0 ? nc - 1 : nc;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(nc, nc);
    for (int a = 0; a < nc; ++a) {
        const int j = freq[a];
        C(a, a) = j == 1 ? 0.25 : 0.5;
        if (a + 1 < nc) C(a, a + 1) = C(a + 1, a) = j == 0 ? -1.0 / (2.0 * std::sqrt(2.0)) : -0.25;
    }
    double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(C, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (ns > 0) {
        const int offset = p == 0 ? 1 : 0;  // sine block starts at frequency 1 or 2
        Eigen::MatrixXd S = Eigen::MatrixXd::Zero(ns, ns);
        for (int a = 0; a < ns; ++a) {
            const int j = freq[a + offset];
            S(a, a) = j == 1 ? 0.75 : 0.5;
            if (a + 1 < ns) S(a, a + 1) = S(a + 1, a) = -0.25;
        }
        lo = std::min(lo, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(S, Eigen::EigenvaluesOnly).eigenvalues()(0));
    }
    return lo;
}

// ------------------------------------------------------------ criteria

Outcome spectral_lower_bound() {
    const auto start = std::chrono::steady_clock::now();
    const auto x2sq = HomogeneousPolynomial::variable(2, 1).power(2);
    double worst_margin = 1.0, worst_gap = 0.0;
    int failures = 0;
    for (int m = 0; m <= 200; ++m) {
        const double value = spectral::min_quadratic_form_eigenvalue(x2sq, m).min_eigenvalue;
        const double bound = M_PI * M_PI / (4.0 * (m + 4.0) * (m + 4.0));
        worst_margin = std::min(worst_margin, value - bound);
        worst_gap = std::max(worst_gap, std::abs(value - trig_min_eigenvalue(m)));
        if (value < bound - kSpectralTolerance) ++failures;
    }
    const double elapsed = seconds_since(start);
    const bool ok = failures == 0 && worst_gap <= kOracleAgreement && elapsed < 30.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "min margin %.3e, max |lib - oracle| %.1e, %.2f s", worst_margin, worst_gap, elapsed);
    return {ok, buf};
}

Outcome even_sharp_constant() {
    const auto x2sq = HomogeneousPolynomial::variable(2, 1).power(2);
    double worst_lib = 0.0, worst_oracle = 0.0;
    for (int m = 0; m <= 60; ++m) {
        const double exact = std::pow(std::sin(M_PI / (4.0 * m + 4.0)), 2);
        worst_lib = std::max(worst_lib, std::abs(spectral::min_quadratic_form_eigenvalue(x2sq, 2 * m).min_eigenvalue - exact));
        worst_oracle = std::max(worst_oracle, std::abs(trig_min_eigenvalue(2 * m) - exact));
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "max error library %.1e, dense oracle %.1e", worst_lib, worst_oracle);
    return {worst_lib <= kEvenTolerance && worst_oracle <= kEvenTolerance, buf};
}

// 2 T_n(-l/2) from the explicit sum: coefficient of l^{n-2k} is
// n (-1)^{n-k} (n-k-1)! / (k! (n-2k)!).
spectral::IntegerPolynomial chebyshev_oracle(int n) {
    spectral::IntegerPolynomial p(static_cast<std::size_t>(n + 1), Integer(0));
    for (int k = 0; 2 * k <= n; ++k) {
        Integer num = Integer(n) * factorial(static_cast<unsigned>(n - k - 1));
        Integer den = factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(n - 2 * k));
        Integer c = num / den;
        if ((n - k) % 2 != 0) c = -c;
        p[static_cast<std::size_t>(n - 2 * k)] = c;
    }
    return p;
}

Outcome chebyshev_identity() {
    double worst_root = 0.0;
    for (int n = 1; n <= 16; ++n) {
        const auto oracle = chebyshev_oracle(n);
        if (spectral::characteristic_polynomial_A(n) != oracle) return {false, "recurrence differs at n = " + std::to_string(n)};
        if (spectral::characteristic_polynomial_by_determinant(n) != oracle) {
            return {false, "determinant differs at n = " + std::to_string(n)};
        }
        // The eigenvalues of the matrix itself are roots of the polynomial.
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = A(i + 1, i) = i == 0 ? std::sqrt(2.0) : 1.0;
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
        for (double lambda : solver.eigenvalues()) {
            double value = 0.0;
            for (std::size_t j = oracle.size(); j-- > 0;) value = value * lambda + oracle[j].get_d();
            worst_root = std::max(worst_root, std::abs(value));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "n = 1..16 exact, max |p(eigenvalue)| %.1e", worst_root);
    return {worst_root < 1e-6, buf};
}

Outcome fischer_exactness() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(kSeed);
    int exact = 0;
    for (int i = 0; i < 500; ++i) {
        const int d = 2 + i % 2;
        const auto problem = random_fischer_problem(rng, d, static_cast<LeadingFamily>(i % 3), true);
        const auto f = random_polynomial(rng, d, 10);
        const auto r = decompose_recursive(problem, f);
        const bool residual_zero = (f - problem.assemble() * r.quotient - r.remainder).is_zero();
        const bool harmonic = laplacian_power(r.remainder, problem.k, d).is_zero();
        if (residual_zero && harmonic) ++exact;
    }
    const double elapsed = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d/500 exact, %.1f s", exact, elapsed);
    return {exact == 500 && elapsed < 60.0, buf};
}

Outcome series_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(kSeed + 1);
    int equal = 0;
    for (int i = 0; i < 100; ++i) {
        const int d = 2 + i % 2;
        const auto problem = random_fischer_problem(rng, d, static_cast<LeadingFamily>(i % 3), true);
        const FischerOperator op(problem);
        const auto f_m = random_nonzero_homogeneous(rng, d, 2 + i % 9);
        if (decompose_series_formula(op, f_m) == decompose_recursive(op, Polynomial(f_m)).quotient) ++equal;
    }
    const double elapsed = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d/100 identical quotients, %.2f s", equal, elapsed);
    return {equal == 100 && elapsed < 60.0, buf};
}

Outcome dirichlet_closed_forms() {
    const int d = 2;
    const auto x1 = Polynomial::variable(d, 0);
    const auto x2 = Polynomial::variable(d, 1);
    const Polynomial f = x1 * x1;
    dirichlet::SolveOptions options;
    options.estimate_order = false;

    const auto disk = dirichlet::solve(dirichlet::DomainSpec::ellipsoid({1, 1}), f, options);
    const Polynomial disk_expected = Polynomial::constant(d, Rational(1, 2)) + (x1 * x1 - x2 * x2) * Rational(1, 2);
    const auto parabola = dirichlet::solve(dirichlet::DomainSpec::parabola(1), f, options);
    const Polynomial parabola_expected = x1 * x1 - x2 * x2 + x1;
    const auto h_disk = disk.decomposition.remainder.truncated();
    const auto h_parabola = parabola.decomposition.remainder.truncated();

    // Residuals sampled here on (cos t, sin t) and (t^2, t), t in [-4, 4].
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double t = 2 * M_PI * i / 1000;
        const double p[2] = {std::cos(t), std::sin(t)};
        worst = std::max(worst, std::abs(f.evaluate(p) - h_disk.evaluate(p)));
        const double s = -4.0 + 8.0 * i / 999;
        const double q[2] = {s * s, s};
        worst = std::max(worst, std::abs(f.evaluate(q) - h_parabola.evaluate(q)));
    }
    const bool ok = disk.decomposition.exact() && parabola.decomposition.exact() && h_disk == disk_expected &&
                    h_parabola == parabola_expected && worst <= kBoundaryTolerance &&
                    disk.residual.max_residual <= kBoundaryTolerance &&
                    parabola.residual.max_residual <= kBoundaryTolerance;
    char buf[160];
    std::snprintf(buf, sizeof buf, "closed forms exact, max boundary residual %.1e", worst);
    return {ok, buf};
}

Outcome strip_two_decompositions() {
    const auto start = std::chrono::steady_clock::now();
    const int N = 16;
    const auto w = dirichlet::nonuniqueness_witness(dirichlet::DomainSpec::strip(1), N);
    const auto f = entire::sin_exp_series(N, w.c).truncated();
    const auto P = parse_polynomial("x1^2 - 1", 2);
    // Both certificates recomputed here.
    const bool pipeline_ok = (f - P * w.pipeline.quotient - w.pipeline.remainder).is_zero() &&
                             w.pipeline.remainder.laplacian().is_zero();
    const auto formal_residual = f - P * w.formal.quotient - w.formal.remainder;
    bool formal_ok = w.formal.remainder.laplacian().is_zero();
    for (const auto& [deg, part] : formal_residual.parts()) formal_ok = formal_ok && deg > N;
    const bool differ = !(w.pipeline.quotient == w.formal.quotient) || !(w.pipeline.remainder == w.formal.remainder);
    const double elapsed = seconds_since(start);
    char buf[200];
    std::snprintf(buf, sizeof buf, "pipeline exact %s, formal exact through N %s, differ %s, %.2f s",
                  pipeline_ok ? "yes" : "no", formal_ok ? "yes" : "no", differ ? "yes" : "no", elapsed);
    return {pipeline_ok && formal_ok && differ && w.data_harmonic && elapsed < 10.0, buf};
}

Outcome norm_bound_transfer() {
    FischerProblem problem;
    problem.dimension = 2;
    problem.leading = HomogeneousPolynomial::variable(2, 1).power(2);
    const FischerOperator op(problem);
    // pi < 3.14159265358980, so C below is at least the true constant: a pass
    // with it implies a pass with the true constant.
    const Rational pi_hi = parse_rational("314159265358980/100000000000000");
    Rng rng(kSeed + 2);
    std::uniform_int_distribution<int> degree(2, 20);
    int violations = 0;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int m = degree(rng);
        const auto f = random_nonzero_homogeneous(rng, 2, m);
        const auto q = Polynomial(op.apply(f));
        const Rational c = pi_hi * pi_hi / (4 * (m + 2) * (m + 2));
        const Rational lhs = sphere::norm_squared_ratio(q) * c * c;
        const Rational rhs = sphere::norm_squared_ratio(Polynomial(f));
        if (lhs > rhs) ++violations;
        worst = std::max(worst, std::sqrt(Rational(lhs / rhs).get_d()));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d violations in 100, worst ||Tf|| C/||f|| = %.4f", violations, worst);
    return {violations == 0, buf};
}

entire::EntireSeries synthetic(double rho, int N) {
    entire::EntireSeries s(2, N);
    for (int m = 1; m <= N; ++m) {
        const Rational c = rational_from_double(std::pow(static_cast<double>(m), -m / rho));
        s.set_part(m, HomogeneousPolynomial::variable(2, 0).power(m) * ComplexRational(c));
    }
    return s;
}

Outcome order_estimator() {
    std::string detail;
    bool ok = true;
    for (double rho : {0.5, 1.0, 2.0}) {
        const auto est = entire::order_estimate(synthetic(rho, 60));
        ok = ok && std::abs(est.order - rho) <= kSyntheticOrderTolerance * rho;
        char buf[64];
        std::snprintf(buf, sizeof buf, "rho %.1f -> %.4f; ", rho, est.order);
        detail += buf;
    }
    entire::EntireSeries e(2, 60);
    Rational c = 1;
    for (int m = 0; m <= 60; ++m) {
        if (m > 0) c /= m;
        e.set_part(m, HomogeneousPolynomial::variable(2, 0).power(m) * ComplexRational(c));
    }
    const auto est = entire::order_estimate(e);
    ok = ok && std::abs(est.order - 1.0) <= kExpOrderTolerance && est.type && std::abs(*est.type - 1.0) <= kExpTypeTolerance;
    char buf[96];
    std::snprintf(buf, sizeof buf, "exp -> order %.4f, type %.4f", est.order, est.type ? *est.type : NAN);
    return {ok, detail + buf};
}

Outcome sine_lower_bound() {
    long long violations = 0;
    long double worst = 1.0L;
    const long double pi = 3.141592653589793238462643383279502884L;
    for (long long n = 2; n <= 1000000; ++n) {
        const long double lhs = std::sin(pi / n);
        const long double rhs = pi / (n + 2);
        if (lhs < rhs) ++violations;
        worst = std::min(worst, (lhs - rhs) / rhs);
    }
    const auto lib = spectral::sine_bound_check(1000000);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%lld violations (library %lld), min relative margin %.3Le", violations,
                  lib.violations, worst);
    return {violations == 0 && lib.violations == 0, buf};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1  x2^2 eigenvalue >= pi^2/(4(m+4)^2) - 1e-12, m <= 200", spectral_lower_bound},
        {"2  degree 2m minimum = sin^2(pi/(4m+4)) within 1e-9, m <= 60", even_sharp_constant},
        {"3  det(A_n - l I) = 2 T_n(-l/2) exactly, n <= 16", chebyshev_identity},
        {"4  500 random decompositions exact", fischer_exactness},
        {"5  iterated series = recursion on 100 instances", series_equivalence},
        {"6  disk and parabola closed forms, residual <= 1e-10", dirichlet_closed_forms},
        {"7  strip data with two exact decompositions, N = 16", strip_two_decompositions},
        {"8  ||T f_m|| <= 4(m+2)^2/pi^2 ||f_m||, 100 samples", norm_bound_transfer},
        {"9  order estimator on synthetic and exp series", order_estimator},
        {"10 sin(pi/n) >= pi/(n+2), 2 <= n <= 1e6", sine_lower_bound},
    };
    int failed = 0;
    for (const auto& [label, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.passed) ++failed;
        std::printf("%-62s %s  %s\n", label.c_str(), o.passed ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
