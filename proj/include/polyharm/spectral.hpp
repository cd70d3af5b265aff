#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "polyharm/execution.hpp"
#include "polyharm/fischer.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/polynomial.hpp"

/// Minimal eigenvalues of multiplication operators f -> P f on degree-m
/// homogeneous polynomials over the sphere, and the tridiagonal matrices that
/// give them in closed form for P = x2^2 on the circle.
namespace polyharm::spectral {

/// Univariate polynomial in lambda with integer coefficients, lowest degree first.
using IntegerPolynomial = std::vector<Integer>;

/// The n x n tridiagonal matrix with zero diagonal, first off-diagonal pair
/// sqrt(2) and the rest 1.
Eigen::MatrixXd tridiagonal_A(int n);
/// tridiagonal_A(m + 1) without its first row and column: zero diagonal, ones beside it.
Eigen::MatrixXd tridiagonal_B(int m);

/// det(A_n - lambda I) from the three-term recurrence p_{n+1} = -lambda p_n - p_{n-1},
/// p_0 = 2, p_1 = -lambda.
IntegerPolynomial characteristic_polynomial_A(int n);

/// Same determinant computed independently: A_n is similar to an integer
/// matrix (conjugate by diag(1, sqrt2, ..., sqrt2)); evaluate its exact
/// determinant at n + 1 integer points and interpolate.
IntegerPolynomial characteristic_polynomial_by_determinant(int n);

/// Chebyshev T_n from T_{n+1} = 2x T_n - T_{n-1}.
IntegerPolynomial chebyshev_T(int n);
/// 2 T_n(-lambda / 2) expanded in lambda.
IntegerPolynomial scaled_chebyshev(int n);

/// det(A_n - lambda I) == 2 T_n(-lambda/2) as integer polynomials, with the
/// determinant taken from both the recurrence and the interpolation route.
bool chebyshev_identity_check(int n);

std::string to_string(const IntegerPolynomial& p);

/// Largest eigenvalue of A_n in closed form: -2 cos((2n-1) pi / (2n)).
double max_eigenvalue_A(int n);
/// Same from a dense symmetric eigen-solve.
double max_eigenvalue_A_numeric(int n);
double max_eigenvalue_B_numeric(int m);

/// pi^2 / (4 (m+4)^2).
double paper_bound(int m);
/// Rational enclosure of paper_bound(m), from a rational enclosure of pi.
RationalInterval paper_bound_interval(int m);
/// pi^2 / (4 (2n+3)^2), the sharper constant at even degree 2n.
double even_degree_constant(int n);
/// Exact minimum of <x2^2 f, f> / <f, f> on degree-m polynomials over the circle:
/// sin^2(pi / (2m + 4)).
double exact_min_eigenvalue_x2_squared(int m);
/// At even degree 2n, the same value through the tridiagonal route:
/// (2 - mu*(A_{n+1})) / 4.
double even_min_eigenvalue_via_chebyshev(int n);

enum class EigenMethod {
    Automatic,  ///< Fourier route for d = 2, monomial route otherwise
    Fourier,    ///< d = 2: Toeplitz matrix of Fourier coefficients of P on e^{i kappa t}
    Monomial,   ///< exact Gram LDL^T in the monomial basis, then a float symmetric solve
};

struct SpectralReport {
    int degree = 0;
    int dimension = 0;
    double min_eigenvalue = 0.0;
    double paper_bound = 0.0;
    double margin = 0.0;
    std::optional<double> exact_closed_form;  ///< d = 2, P = x2^2
    std::optional<double> even_constant;      ///< even degrees in verify_main_inequality
    std::optional<double> transfer_bound;     ///< odd degrees: min eigenvalue at degree m + 1
};

/// min over f != 0 of <P f, f> / <f, f> on degree-m homogeneous polynomials
/// over S^{d-1}. P must have real coefficients. Throws IllConditionedGram if
/// the exact Gram factorization fails.
SpectralReport min_quadratic_form_eigenvalue(const HomogeneousPolynomial& P, int m,
                                             EigenMethod method = EigenMethod::Automatic);

/// Reports for m = 0..m_max with P = x2^2, d = 2. Throws BoundViolated if any
/// margin is below -tolerance, if an even degree falls below its sharp constant,
/// or if an odd degree falls below the bound transferred from degree m + 1.
std::vector<SpectralReport> verify_main_inequality(int m_max, Execution execution = Execution::Parallel,
                                                   double tolerance = 1e-12);

/// sin(pi/n) >= pi/(n+2) for 2 <= n <= n_max.
kernels::SineScan sine_bound_check(long long n_max, Execution execution = Execution::Parallel);

/// CSV with columns m,min_eigenvalue,paper_bound,margin,exact_closed_form.
std::string reports_to_csv(const std::vector<SpectralReport>& reports);

}  // namespace polyharm::spectral
