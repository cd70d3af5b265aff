#pragma once

#include <cstdint>
#include <vector>

#include "polyharm/execution.hpp"
#include "polyharm/polynomial.hpp"
#include "polyharm/rational.hpp"

/// L^2 geometry of the unit sphere S^{d-1}. Inner products are kept as exact
/// rational multiples of the surface area omega_{d-1}; the area itself only
/// enters when a float is requested.
namespace polyharm::sphere {

/// omega_{d-1} = 2 pi^{d/2} / Gamma(d/2).
double surface_area(int dimension);

/// r such that  integral over S^{d-1} of theta^alpha  =  r * omega_{d-1}.
/// Zero if any exponent is odd.
Rational monomial_sphere_integral(const MultiIndex& alpha);

struct SphereInnerProductValue {
    ComplexRational rational_part;  ///< value / omega_{d-1}
    int dimension = 0;

    [[nodiscard]] double to_double() const { return rational_part.re.get_d() * surface_area(dimension); }
    [[nodiscard]] std::complex<double> to_complex() const {
        return rational_part.to_complex() * surface_area(dimension);
    }
};

/// <f, g> = integral of f conj(g) over the sphere, exactly.
SphereInnerProductValue sphere_inner_product(const Polynomial& f, const Polynomial& g);

/// ||f||^2 / omega_{d-1}, exact.
Rational norm_squared_ratio(const Polynomial& f);

/// L^2 norm as a double (includes the omega factor).
double l2_norm(const Polynomial& f);

/// Spherical harmonic on S^1 stored as the harmonic homogeneous polynomial
/// Re or Im of (x1 + i x2)^kappa, scaled by sqrt(scale_times_pi / pi).
struct CircleHarmonic {
    int frequency = 0;
    int kind = 0;  ///< 0: cosine, 1: sine
    HomogeneousPolynomial polynomial;
    Rational scale_times_pi;  ///< squared normalization times pi: 1 for kappa >= 1, 1/2 for kappa = 0, 0 for Y_{0,1}

    [[nodiscard]] bool is_zero() const { return polynomial.is_zero(); }
    /// Y(t) at the angle t.
    [[nodiscard]] double evaluate(double t) const;
};

struct CircleHarmonicPair {
    CircleHarmonic cosine;  ///< Y_{kappa,0}
    CircleHarmonic sine;    ///< Y_{kappa,1}
};

/// Orthonormal basis pair for frequency kappa >= 0 (Y_{0,1} is the zero function).
CircleHarmonicPair circle_harmonic_basis(int kappa);

/// <w * a, b> on S^1 with a polynomial weight w, exact. The result may carry a
/// sqrt(2) when exactly one side is the constant harmonic.
Surd weighted_harmonic_product(const HomogeneousPolynomial& weight, const CircleHarmonic& a, const CircleHarmonic& b);

/// <a, b> on S^1, exact.
Surd harmonic_inner_product(const CircleHarmonic& a, const CircleHarmonic& b);

/// f_n = sum_l h_l |x|^{n - deg h_l}, each h_l harmonic homogeneous.
/// harmonics[l] has degree (n mod 2) + 2 l.
struct AlmansiDecomposition {
    int dimension = 0;
    int degree = 0;
    std::vector<HomogeneousPolynomial> harmonics;

    [[nodiscard]] HomogeneousPolynomial reassemble() const;
};

/// Gauss decomposition by repeated exact splitting f = |x|^2 q + h, Delta h = 0.
/// Works for any degree; the even case is the classical one.
AlmansiDecomposition gauss_decompose(const HomogeneousPolynomial& f);

struct SamplingOptions {
    std::size_t circle_samples = 4096;
    std::size_t sphere_samples = 65536;
    std::uint64_t seed = 0x5eed5eedULL;
};

/// Deterministic sample points on S^{d-1}, row-major (count x d): uniform
/// angles for d = 2, a Fibonacci lattice for d = 3, seeded Gaussian directions
/// otherwise.
std::vector<double> sphere_sample_points(int dimension, const SamplingOptions& options = {});

struct SupNormEstimate {
    double sampled = 0.0;          ///< max |f| over the sample points
    double certified_bound = 0.0;  ///< sqrt(2)/sqrt(omega) (1+m)^{(d-1)/2} ||f||_{L^2}
    std::size_t samples = 0;
};

/// sqrt(2/omega_{d-1}) (1+m)^{(d-1)/2} ||f||_{L^2}; omega cancels against ||f||.
double certified_sup_bound(const HomogeneousPolynomial& f);

SupNormEstimate sup_norm_estimate(const HomogeneousPolynomial& f, const SamplingOptions& options = {},
                                  Execution execution = Execution::Parallel);

}  // namespace polyharm::sphere
