#include <doctest.h>

#include <cmath>

#include "polyharm/dirichlet.hpp"
#include "polyharm/entire.hpp"
#include "polyharm/errors.hpp"

using namespace polyharm;
using namespace polyharm::entire;

namespace {

Polynomial P(const char* text, int d = 2) { return parse_polynomial(text, d); }

}  // namespace

TEST_CASE("exponential series parts") {
    const auto e = exp_series(2, 10, 0, Rational(3));
    for (int m = 0; m <= 10; ++m) {
        Rational c = 1;
        for (int j = 1; j <= m; ++j) c = c * 3 / j;
        CHECK(e.part(m) == HomogeneousPolynomial::variable(2, 0).power(m) * ComplexRational(c));
    }
    CHECK(e.generator()->name == "exp");
    CHECK(extend(e, 14).part(12) == exp_series(2, 14, 0, Rational(3)).part(12));
}

TEST_CASE("sin exp parts are harmonic") {
    const auto s = sin_exp_series(14, Rational(3, 2));
    for (const auto& part : s.parts()) CHECK(part.laplacian().is_zero());
    // Degree one: c x1.
    CHECK(Polynomial(s.part(1)) == P("3/2*x1"));
    // Numeric check against sin(c x1) e^{c x2} at a point.
    const double x[2] = {0.3, -0.2};
    const double value = s.truncated().evaluate(x).real();
    CHECK(value == doctest::Approx(std::sin(1.5 * 0.3) * std::exp(1.5 * -0.2)).epsilon(1e-10));
}

TEST_CASE("series from polynomials") {
    const auto f = P("x1^3 + 2*x2 + 5");
    const auto s = EntireSeries::from_polynomial(f, 6);
    CHECK(s.truncation() == 6);
    CHECK(s.truncated() == f);
    CHECK(s.highest_nonzero_degree() == 3);
    CHECK_THROWS(extend(s, 10));
}

TEST_CASE("order estimates on series with known growth") {
    for (double rho : {0.5, 1.0, 2.0}) {
        const auto est = order_estimate(synthetic_order_series(2, 60, rho));
        CHECK(est.order == doctest::Approx(rho).epsilon(0.02));
    }
    const auto e = order_estimate(exp_series(2, 40));
    CHECK(e.order == doctest::Approx(1.0).epsilon(0.05));
    REQUIRE(e.type);
    CHECK(*e.type == doctest::Approx(1.0).epsilon(0.1));
    CHECK(e.method == "regression");
    CHECK(e.raw_order > 1.0);  // the raw limsup sequence converges slowly from above

    const auto b = order_estimate(bessel_series(2, 60));
    CHECK(b.order == doctest::Approx(0.5).epsilon(0.05));

    const auto e3 = order_estimate(exp_series(3, 40, 2));
    CHECK(e3.order == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("polynomials have zero tail") {
    const auto s = EntireSeries::from_polynomial(P("x1^3 + 1"), 20);
    CHECK_THROWS_AS(order_estimate(s), AllZeroTail);
    CHECK_THROWS_AS(order_estimate(exp_series(2, 6)), std::invalid_argument);
}

TEST_CASE("sampled and certified sup norms bracket the exact one") {
    OrderOptions certified;
    certified.sampled = false;
    const auto s = order_estimate(exp_series(2, 40));
    const auto c = order_estimate(exp_series(2, 40), certified);
    for (std::size_t m = 0; m < s.sup_norms.size(); ++m) CHECK(s.sup_norms[m] <= c.sup_norms[m] * (1 + 1e-12));
}

TEST_CASE("series decomposition reduces to the recursion on polynomials") {
    Rng rng(41);
    for (int i = 0; i < 10; ++i) {
        const auto problem = random_fischer_problem(rng, 2, static_cast<LeadingFamily>(i % 3), true);
        const auto f = random_polynomial(rng, 2, 8);
        DecomposeOptions options;
        options.estimate_order = false;
        const auto series = decompose_entire(problem, EntireSeries::from_polynomial(f, 8), options);
        const auto direct = decompose_recursive(problem, f);
        CHECK(series.exact());
        CHECK(series.quotient.truncated() == direct.quotient);
        CHECK(series.remainder.truncated() == direct.remainder);
    }
}

TEST_CASE("serial and parallel series decompositions agree") {
    const auto problem = problem_from_polynomial(P("x1^2 + 2*x2^2 - 1"), 1);
    DecomposeOptions serial;
    serial.execution = Execution::Serial;
    DecomposeOptions parallel;
    const auto f = exp_series(2, 24);
    const auto a = decompose_entire(problem, f, serial);
    const auto b = decompose_entire(problem, f, parallel);
    CHECK(a.quotient == b.quotient);
    CHECK(a.remainder == b.remainder);
    CHECK(a.exact());
}

TEST_CASE("order gate and warnings") {
    const auto parabola = dirichlet::to_fischer_problem(dirichlet::DomainSpec::parabola(1));
    CHECK(order_gate(parabola.problem, parabola.constants) == doctest::Approx(0.5));
    DecomposeOptions options;
    options.constants = parabola.constants;
    const auto r = decompose_entire(parabola.problem, exp_series(2, 24), options);
    CHECK(r.exact());
    CHECK(r.warnings.size() == 1);

    const auto disk = dirichlet::to_fischer_problem(dirichlet::DomainSpec::ellipsoid({1, 1}));
    CHECK(std::isinf(order_gate(disk.problem, disk.constants)));
}

TEST_CASE("orders of quotient and remainder on the disk") {
    const auto disk = dirichlet::to_fischer_problem(dirichlet::DomainSpec::ellipsoid({1, 1}));
    const auto f = exp_series(2, 40);
    const auto r = decompose_entire(disk.problem, f);
    const auto cmp = order_of_decomposition(f, r.quotient, r.remainder);
    CHECK(cmp.order_q <= 1.1);
    CHECK(cmp.order_h <= 1.1);

    const auto poly = EntireSeries::from_polynomial(P("x1^2"), 2);
    const auto rp = decompose_entire(disk.problem, poly);
    const auto cp = order_of_decomposition(poly, rp.quotient, rp.remainder);
    CHECK(cp.order_f == 0.0);
    CHECK(cp.order_q == 0.0);
    CHECK(cp.order_h == 0.0);
}

TEST_CASE("tail table") {
    const auto disk = dirichlet::to_fischer_problem(dirichlet::DomainSpec::ellipsoid({1, 1}));
    const auto r = decompose_entire(disk.problem, exp_series(2, 30));
    REQUIRE(!r.tail.empty());
    CHECK(r.tail.front().degree == 0);
    const std::string csv = tail_to_csv(r.tail);
    CHECK(csv.rfind("M,norm_GM,bound_shape\n", 0) == 0);
}
