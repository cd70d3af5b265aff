#include <doctest.h>

#include "polyharm/exact_linalg.hpp"
#include "polyharm/polynomial.hpp"
#include "polyharm/random.hpp"

using namespace polyharm;

namespace {

Polynomial P(const char* text, int d = 2) { return parse_polynomial(text, d); }

// Term-by-term differentiation written against the raw term map, independent
// of apply_operator.
Polynomial differentiate_naive(const Polynomial& f, const std::vector<int>& gamma) {
    Polynomial out(f.dimension());
    for (const auto& [deg, part] : f.parts()) {
        for (const auto& [alpha, c] : part.terms()) {
            auto e = alpha.to_vector();
            Rational factor = 1;
            bool zero = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < gamma[i]) zero = true;
                for (int r = 0; r < gamma[i] && !zero; ++r) factor *= e[i] - r;
                e[i] -= gamma[i];
            }
            if (!zero) out.add_term(MultiIndex(std::span<const int>(e)), c * ComplexRational(factor));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(format_rational(Rational(3, 2)) == "3/2");
    CHECK(format_rational(parse_rational("-4/2")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("monomial counts match binomial coefficients") {
    CHECK(homogeneous_dimension(2, 7) == 8);
    CHECK(homogeneous_dimension(3, 4) == 15);
    CHECK(monomials_of_degree(3, 4).size() == 15);
}

TEST_CASE("graded parts") {
    auto parts = graded_parts(P("x1^2 + 3*x2"));
    REQUIRE(parts.size() == 2);
    CHECK(Polynomial(parts.at(2)) == P("x1^2"));
    CHECK(Polynomial(parts.at(1)) == P("3*x2"));
    CHECK(graded_parts(Polynomial(2)).empty());
    auto square = graded_parts(P("(x1+x2)^2"));
    REQUIRE(square.size() == 1);
    CHECK(Polynomial(square.at(2)) == P("x1^2 + 2*x1*x2 + x2^2"));
}

TEST_CASE("polynomial algebra") {
    CHECK(P("(x1 - x2)*(x1 + x2)") == P("x1^2 - x2^2"));
    CHECK(P("i*x1").conj() == P("-i*x1"));
    CHECK(P("x1^3").laplacian() == P("6*x1"));
    CHECK(P("x1^2 - x1^2").is_zero());
    CHECK_THROWS(parse_polynomial("x3", 2));
}

TEST_CASE("constant-coefficient operators") {
    CHECK(apply_operator(P("x1^2"), P("x1^2")) == Polynomial::constant(2, 2));
    CHECK(apply_operator(P("x1^2 + x2^2"), P("x1^2 - x2^2")).is_zero());
    CHECK(apply_operator(P("x1*x2"), P("x1^2*x2^3")) == P("6*x1*x2^2"));
}

TEST_CASE("operator application matches naive differentiation") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_polynomial(rng, 3, 6);
        const auto Q = random_homogeneous(rng, 3, 2 + trial % 2);
        Polynomial expected(3);
        for (const auto& [alpha, c] : Q.terms()) expected += differentiate_naive(f, alpha.to_vector()) * c;
        CHECK(apply_operator(Polynomial(Q), f) == expected);
    }
}

TEST_CASE("operator composition is multiplication of symbols") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_polynomial(rng, 2, 7);
        const auto a = random_polynomial(rng, 2, 2);
        const auto b = random_polynomial(rng, 2, 3);
        CHECK(apply_operator(a * b, f) == apply_operator(a, apply_operator(b, f)));
    }
}

TEST_CASE("iterated Laplacian") {
    CHECK(laplacian_power(P("x1^4"), 2, 2) == Polynomial::constant(2, 24));
    CHECK(laplacian_power(P("x1^2 - x2^2"), 1, 2).is_zero());
    // Delta r^4 = 4 * (4 + d - 2) r^2 = 16 r^2 for d = 2.
    CHECK(laplacian_power(P("(x1^2 + x2^2)^2"), 1, 2) == P("16*x1^2 + 16*x2^2"));
}

TEST_CASE("Fischer inner product") {
    CHECK(fischer_inner_product(P("x1^2"), P("x1^2")) == ComplexRational(2));
    CHECK(fischer_inner_product(P("x1"), P("x2")) == ComplexRational(0));
    CHECK(fischer_inner_product(P("x1*x2"), P("x1*x2")) == ComplexRational(1));
}

TEST_CASE("multiplication is adjoint to differentiation in the Fischer product") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 2 + trial % 2;
        const auto q = random_polynomial(rng, d, 2);
        const auto f = random_polynomial(rng, d, 5);
        const auto g = random_polynomial(rng, d, 7);
        CHECK(fischer_inner_product(q * f, g) == fischer_inner_product(f, apply_operator(q, g)));
    }
}

TEST_CASE("compiled evaluation agrees with plain evaluation") {
    Rng rng(14);
    const auto f = random_polynomial(rng, 3, 9);
    const CompiledPolynomial c(f);
    const double x[3] = {0.3, -0.7, 0.2};
    CHECK(std::abs(c(x) - f.evaluate(x)) < 1e-12);
}

TEST_CASE("Bareiss solve, determinant, rank") {
    RationalMatrix A(3, 3);
    const int v[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = v[i][j];
    CHECK(determinant(A) == Rational(-1));
    RationalMatrix b(3, 1);
    b(0, 0) = 4;
    b(1, 0) = 5;
    b(2, 0) = 6;
    auto x = bareiss_solve(A, b);
    REQUIRE(x);
    CHECK(A * *x == b);
    RationalMatrix S(2, 2);
    S(0, 0) = 1;
    S(0, 1) = 2;
    S(1, 0) = 2;
    S(1, 1) = 4;
    CHECK(rank(S) == 1);
    CHECK_FALSE(bareiss_solve(S, RationalMatrix::identity(2)));
}

TEST_CASE("LDL^T reconstructs a symmetric positive matrix") {
    RationalMatrix A(3, 3);
    const int v[3][3] = {{4, 2, 0}, {2, 5, 1}, {0, 1, 3}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = v[i][j];
    auto f = ldlt(A);
    REQUIRE(f);
    RationalMatrix D(3, 3);
    for (int i = 0; i < 3; ++i) D(i, i) = f->D[i];
    CHECK(f->L * D * f->L.transpose() == A);
}
