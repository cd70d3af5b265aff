#pragma once

#include <cstdint>
#include <random>

#include "polyharm/polynomial.hpp"

/// Seeded generators for randomized checks. Coefficients are small integers
/// over small denominators so exact arithmetic stays cheap.
namespace polyharm {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct RandomCoefficients {
    int numerator_bound = 5;    ///< numerators in [-bound, bound]
    int denominator_bound = 3;  ///< denominators in [1, bound]
    double density = 0.7;       ///< probability that a monomial receives a coefficient
    bool complex = false;
};

Rational random_rational(Rng& rng, const RandomCoefficients& options = {});

/// Random homogeneous polynomial; may be zero when density is low.
HomogeneousPolynomial random_homogeneous(Rng& rng, int dimension, int degree, const RandomCoefficients& options = {});

/// Nonzero random homogeneous polynomial.
HomogeneousPolynomial random_nonzero_homogeneous(Rng& rng, int dimension, int degree,
                                                 const RandomCoefficients& options = {});

/// Sum of random homogeneous parts of every degree 0..max_degree.
Polynomial random_polynomial(Rng& rng, int dimension, int max_degree, const RandomCoefficients& options = {});

/// Random positive definite quadratic form x^T M x with M = L L^T + I, L random integer lower triangular.
HomogeneousPolynomial random_positive_quadratic(Rng& rng, int dimension);

}  // namespace polyharm
