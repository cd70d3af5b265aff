#include <doctest.h>

#include <thread>

#include "polyharm/errors.hpp"
#include "polyharm/fischer.hpp"
#include "polyharm/sphere.hpp"

using namespace polyharm;

namespace {

Polynomial P(const char* text, int d = 2) { return parse_polynomial(text, d); }

FischerProblem leading_only(const char* text, int k = 1, int d = 2) { return problem_from_polynomial(P(text, d), k); }

}  // namespace

TEST_CASE("problem validation") {
    FischerProblem p = leading_only("x2^2");
    CHECK(p.beta() == -1);
    CHECK(p.degree_drop() == 2);
    auto parabola = leading_only("x2^2 - x1");
    CHECK(parabola.beta() == 1);
    CHECK(parabola.assemble() == P("x2^2 - x1"));
    FischerProblem bad = p;
    bad.lower[2] = P("x1^2").part(2);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("homogeneous operator on small cases") {
    const auto x2sq = leading_only("x2^2");
    CHECK(Polynomial(fischer_operator_homogeneous(x2sq, P("x2^2").part(2))) == Polynomial::constant(2, 1));
    CHECK(Polynomial(fischer_operator_homogeneous(x2sq, P("x1*x2^2").part(3))) == P("x1"));
    const auto r2 = leading_only("x1^2 + x2^2");
    CHECK(Polynomial(fischer_operator_homogeneous(r2, P("x1^2").part(2))) == Polynomial::constant(2, Rational(1, 2)));
    CHECK(fischer_operator_homogeneous(r2, P("x1").part(1)).is_zero());
}

TEST_CASE("decompositions with known answers") {
    auto r = decompose_recursive(leading_only("x2^2"), P("x2^2"));
    CHECK(r.exact());
    CHECK(r.quotient == Polynomial::constant(2, 1));
    CHECK(r.remainder.is_zero());

    r = decompose_recursive(leading_only("x1^2 + x2^2"), P("x1^2"));
    CHECK(r.quotient == Polynomial::constant(2, Rational(1, 2)));
    CHECK(r.remainder == P("1/2*x1^2 - 1/2*x2^2"));

    r = decompose_recursive(leading_only("x2^2 - x1"), P("x1^2"));
    CHECK(r.quotient == Polynomial::constant(2, 1));
    CHECK(r.remainder == P("x1^2 - x2^2 + x1"));

    r = decompose_recursive(leading_only("x1^2 + x2^2 - 1"), P("x1^2"));
    CHECK(r.quotient == Polynomial::constant(2, Rational(1, 2)));
    CHECK(r.remainder == P("1/2*x1^2 - 1/2*x2^2 + 1/2"));

    // Harmonic data on the strip is its own remainder.
    r = decompose_recursive(leading_only("x1^2 - 4"), P("x1^3 - 3*x1*x2^2 + x2"));
    CHECK(r.quotient.is_zero());
    CHECK(r.remainder == P("x1^3 - 3*x1*x2^2 + x2"));

    r = decompose_recursive(leading_only("x2^2"), P("x1 + 3"));
    CHECK(r.quotient.is_zero());
}

TEST_CASE("higher powers of the Laplacian") {
    const auto biharmonic = leading_only("(x1^2 + x2^2)^2", 2);
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_polynomial(rng, 2, 9);
        auto r = decompose_recursive(biharmonic, f);
        CHECK(r.exact());
        CHECK(laplacian_power(r.remainder, 2, 2).is_zero());
    }
}

TEST_CASE("random decompositions certify exactly") {
    Rng rng(32);
    for (int i = 0; i < 60; ++i) {
        const int d = 2 + i % 2;
        const auto problem = random_fischer_problem(rng, d, static_cast<LeadingFamily>(i % 3), i % 2 == 0);
        const auto f = random_polynomial(rng, d, 8);
        auto r = decompose_recursive(problem, f);
        CHECK(r.exact());
        // Independent restatement of the certificate.
        CHECK(f - problem.assemble() * r.quotient - r.remainder == Polynomial(d));
        CHECK(r.remainder.laplacian().is_zero());
    }
}

TEST_CASE("decomposition is linear in the data") {
    Rng rng(33);
    const auto problem = random_fischer_problem(rng, 2, LeadingFamily::RandomPositiveDefinite, true);
    const FischerOperator op(problem);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_polynomial(rng, 2, 7);
        const auto g = random_polynomial(rng, 2, 7);
        const ComplexRational a(Rational(2, 3)), b(Rational(-5, 2));
        const auto rf = decompose_recursive(op, f);
        const auto rg = decompose_recursive(op, g);
        const auto rs = decompose_recursive(op, f * a + g * b);
        CHECK(rs.quotient == rf.quotient * a + rg.quotient * b);
        CHECK(rs.remainder == rf.remainder * a + rg.remainder * b);
    }
}

TEST_CASE("complex leading terms") {
    Rng rng(34);
    const auto problem = leading_only("x1^2 + i*x1*x2 + 2*x2^2");
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_polynomial(rng, 2, 6, {5, 3, 0.7, true});
        CHECK(decompose_recursive(problem, f).exact());
    }
}

TEST_CASE("singular leading term is reported") {
    // x1^2 - x2^2 is harmonic: Delta(P q) misses constants at degree 2.
    const auto problem = leading_only("x1^2 - x2^2");
    CHECK_THROWS_AS(decompose_recursive(problem, P("x1^2")), SingularFischerOperator);
}

TEST_CASE("iterated series equals the recursion") {
    const auto parabola = leading_only("x2^2 - x1");
    SeriesTrace trace;
    CHECK(decompose_series_formula(parabola, P("x1^2").part(2), &trace) == Polynomial::constant(2, 1));
    CHECK(decompose_series_formula(parabola, P("x1").part(1)).is_zero());

    Rng rng(35);
    for (int i = 0; i < 40; ++i) {
        const int d = 2 + i % 2;
        const auto problem = random_fischer_problem(rng, d, static_cast<LeadingFamily>(i % 3), true);
        const FischerOperator op(problem);
        const int m = 2 + i % 8;
        const auto f_m = random_nonzero_homogeneous(rng, d, m);
        SeriesTrace t;
        CHECK(decompose_series_formula(op, f_m, &t) == decompose_recursive(op, Polynomial(f_m)).quotient);
        CHECK(t.layer_bound == m / problem.degree_drop());
        CHECK(t.max_layers <= t.layer_bound + 1);
    }
}

TEST_CASE("operator cache is shared safely between threads") {
    const FischerOperator op(leading_only("x1^2 + 2*x2^2"));
    Rng rng(36);
    std::vector<HomogeneousPolynomial> inputs;
    for (int m = 2; m < 12; ++m) inputs.push_back(random_nonzero_homogeneous(rng, 2, m));
    std::vector<HomogeneousPolynomial> serial;
    for (const auto& f : inputs) serial.push_back(fischer_operator_homogeneous(op.problem(), f));
    std::vector<std::vector<HomogeneousPolynomial>> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            for (const auto& f : inputs) results[t].push_back(op.apply(f));
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& r : results) CHECK(r == serial);
    CHECK(op.cached_degrees() == inputs.size());
}

TEST_CASE("norm bound verdicts are exact") {
    const RationalInterval c{Rational(1, 4), Rational(1, 2)};
    // ||Tf||^2 * hi^2 <= ||f||^2 holds.
    CHECK(check_norm_bound(Rational(4), Rational(1), c) == BoundVerdict::Holds);
    // ||Tf||^2 * lo^2 > ||f||^2 is violated.
    CHECK(check_norm_bound(Rational(17), Rational(1), c) == BoundVerdict::Violated);
    CHECK(check_norm_bound(Rational(8), Rational(1), c) == BoundVerdict::Indeterminate);
}

TEST_CASE("quotient norms respect the spectral constant") {
    const FischerOperator op(leading_only("x2^2"));
    // pi^2 / 64 bracketed by 14-digit decimal bounds on pi.
    const Rational pi_lo = parse_rational("314159265358979/100000000000000");
    const Rational pi_hi = parse_rational("314159265358980/100000000000000");
    const RationalInterval c0{Rational(pi_lo * pi_lo / 64), Rational(pi_hi * pi_hi / 64)};
    Rng rng(37);
    auto record = operator_norm_bound(op, 2, c0, 100, rng);
    CHECK(record.violations == 0);
    CHECK(record.worst_ratio <= record.allowed_ratio);

    // f = P g gives T f = g exactly.
    const auto x2sq = P("x2^2").part(2);
    for (int m = 0; m < 6; ++m) {
        const auto g = random_nonzero_homogeneous(rng, 2, m);
        CHECK(op.apply(x2sq * g) == g);
    }
    // Harmonic data has zero quotient.
    CHECK(op.apply(P("x1^3 - 3*x1*x2^2").part(3)).is_zero());
}
