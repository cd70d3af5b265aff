#include "polyharm/random.hpp"

namespace polyharm {

Rational random_rational(Rng& rng, const RandomCoefficients& options) {
    std::uniform_int_distribution<int> num(-options.numerator_bound, options.numerator_bound);
    std::uniform_int_distribution<int> den(1, options.denominator_bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

HomogeneousPolynomial random_homogeneous(Rng& rng, int dimension, int degree, const RandomCoefficients& options) {
    HomogeneousPolynomial f(dimension, degree);
    std::bernoulli_distribution keep(options.density);
    for (const auto& alpha : monomials_of_degree(dimension, degree)) {
        if (!keep(rng)) continue;
        ComplexRational c(random_rational(rng, options));
        if (options.complex) c.im = random_rational(rng, options);
        f.add_term(alpha, c);
    }
    return f;
}

HomogeneousPolynomial random_nonzero_homogeneous(Rng& rng, int dimension, int degree,
                                                 const RandomCoefficients& options) {
    for (;;) {
        auto f = random_homogeneous(rng, dimension, degree, options);
        if (!f.is_zero()) return f;
    }
}

Polynomial random_polynomial(Rng& rng, int dimension, int max_degree, const RandomCoefficients& options) {
    Polynomial f(dimension);
    for (int m = 0; m <= max_degree; ++m) f.add(random_homogeneous(rng, dimension, m, options));
    return f;
}

HomogeneousPolynomial random_positive_quadratic(Rng& rng, int dimension) {
    std::uniform_int_distribution<int> entry(-2, 2);
    std::vector<std::vector<int>> L(static_cast<std::size_t>(dimension), std::vector<int>(static_cast<std::size_t>(dimension)));
    for (int i = 0; i < dimension; ++i)
        for (int j = 0; j <= i; ++j) L[i][j] = entry(rng);
    HomogeneousPolynomial q(dimension, 2);
    for (int i = 0; i < dimension; ++i) {
        for (int j = 0; j < dimension; ++j) {
            int m = i == j ? 1 : 0;
            for (int l = 0; l < dimension; ++l) m += L[i][l] * L[j][l];
            if (m == 0) continue;
            MultiIndex a(dimension);
            a.set(i, 1);
            MultiIndex b(dimension);
            b.set(j, 1);
            q.add_term(a + b, ComplexRational(m));
        }
    }
    return q;
}

}  // namespace polyharm
