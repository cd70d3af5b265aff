#include "polyharm/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polyharm/errors.hpp"
#include "polyharm/exact_linalg.hpp"
#include "polyharm/format.hpp"
#include "polyharm/sphere.hpp"

namespace polyharm::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

// 3.14159265358979 < pi < 3.14159265358980.
const Rational& pi_lower() {
    static const Rational v = Rational(Integer("314159265358979"), Integer("100000000000000"));
    return v;
}
const Rational& pi_upper() {
    static const Rational v = Rational(Integer("314159265358980"), Integer("100000000000000"));
    return v;
}

void trim(IntegerPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntegerPolynomial sub(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    IntegerPolynomial r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// lambda * p * c
IntegerPolynomial shift_scale(const IntegerPolynomial& p, const Integer& c) {
    IntegerPolynomial r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] * c;
    trim(r);
    return r;
}

bool is_x2_squared(const HomogeneousPolynomial& P) {
    if (P.dimension() != 2) return false;
    auto x2 = HomogeneousPolynomial::variable(2, 1);
    return P == x2 * x2;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& M) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigen-solve did not converge");
    return solver.eigenvalues();
}

// Toeplitz matrix of the Fourier coefficients of P on span{e^{i kappa t}},
// kappa = -m, -m+2, ..., m, which is orthonormal after dividing by sqrt(2 pi).
double min_eigenvalue_fourier(const HomogeneousPolynomial& P, int m) {
    const int p = P.degree();
    // Fourier coefficient c_j = (1/2pi) integral P e^{-ijt} = <P, z^j> / omega_1 with z = x1 + i x2.
    std::map<int, std::complex<double>> coeff;
    const Polynomial Pp(P);
    HomogeneousPolynomial z(2, 1);
    z.add_term(MultiIndex{1, 0}, ComplexRational(1));
    z.add_term(MultiIndex{0, 1}, ComplexRational(0, 1));
    for (int j = -p; j <= p; ++j) {
        if ((j + p) % 2 != 0) continue;
        auto zj = j >= 0 ? z.power(j) : z.conj().power(-j);
        auto v = sphere::sphere_inner_product(Pp, Polynomial(zj)).rational_part;
        if (!v.is_zero()) coeff[j] = v.to_complex();
    }
    const int n = m + 1;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            auto it = coeff.find(2 * (r - c));
            if (it != coeff.end()) M(r, c) = it->second;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigen-solve did not converge");
    return solver.eigenvalues()(0);
}

// Generalized problem A v = lambda G v in the monomial basis; G = L D L^T exactly,
// then the eigenvalues of D^{-1/2} L^{-1} A L^{-T} D^{-1/2}.
double min_eigenvalue_monomial(const HomogeneousPolynomial& P, int m) {
    const int d = P.dimension();
    const auto basis = monomials_of_degree(d, m);
    const std::size_t N = basis.size();
    RationalMatrix A(N, N);
    RationalMatrix G(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            const MultiIndex ij = basis[i] + basis[j];
            Rational a = 0;
            for (const auto& [gamma, c] : P.terms()) a += c.re * sphere::monomial_sphere_integral(gamma + ij);
            A(i, j) = A(j, i) = a;
            G(i, j) = G(j, i) = sphere::monomial_sphere_integral(ij);
        }
    }
    auto factor = ldlt(G);
    if (!factor) throw IllConditionedGram("zero pivot in exact LDL^T at degree " + std::to_string(m));
    for (const auto& p : factor->D) {
        if (sgn(p) <= 0) throw IllConditionedGram("non-positive pivot in exact LDL^T at degree " + std::to_string(m));
    }
    const RationalMatrix W = forward_substitute_unit(factor->L, RationalMatrix::identity(N));
    const RationalMatrix C = W * A * W.transpose();
    Eigen::MatrixXd S(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    std::vector<double> inv_sqrt(N);
    for (std::size_t i = 0; i < N; ++i) inv_sqrt[i] = 1.0 / std::sqrt(factor->D[i].get_d());
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = C(i, j).get_d() * inv_sqrt[i] * inv_sqrt[j];
    return symmetric_eigenvalues(S)(0);
}

}  // namespace

// ------------------------------------------------------------- tridiagonals

Eigen::MatrixXd tridiagonal_A(int n) {
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = A(i + 1, i) = i == 0 ? std::sqrt(2.0) : 1.0;
    return A;
}

Eigen::MatrixXd tridiagonal_B(int m) {
    if (m < 1) throw std::invalid_argument("B_m needs m >= 1");
    return tridiagonal_A(m + 1).bottomRightCorner(m, m);
}

IntegerPolynomial characteristic_polynomial_A(int n) {
    if (n < 1) throw std::invalid_argument("characteristic polynomial needs n >= 1");
    IntegerPolynomial prev{2};
    IntegerPolynomial cur{0, -1};
    for (int i = 1; i < n; ++i) {
        auto next = sub(shift_scale(cur, -1), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntegerPolynomial characteristic_polynomial_by_determinant(int n) {
    if (n < 1) throw std::invalid_argument("characteristic polynomial needs n >= 1");
    const auto N = static_cast<std::size_t>(n);
    // diag(1, s, ..., s) A diag(1, 1/s, ..., 1/s) with s = sqrt 2: entry (0,1) becomes 1,
    // entry (1,0) becomes 2, the rest stay 1.
    RationalMatrix base(N, N);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        base(i, i + 1) = 1;
        base(i + 1, i) = i == 0 ? 2 : 1;
    }
    // Values at lambda = 0..n, then Lagrange interpolation in exact rationals.
    std::vector<Rational> values(N + 1);
    for (std::size_t x = 0; x <= N; ++x) {
        RationalMatrix M = base;
        for (std::size_t i = 0; i < N; ++i) M(i, i) = -static_cast<long>(x);
        values[x] = determinant(M);
    }
    std::vector<Rational> coeffs(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        // basis polynomial prod_{j != i} (lambda - j) / (i - j)
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j <= N; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1);
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * static_cast<long>(j);
            }
            basis = std::move(next);
            denom *= static_cast<long>(i) - static_cast<long>(j);
        }
        for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += values[i] * basis[t] / denom;
    }
    IntegerPolynomial out(N + 1);
    for (std::size_t t = 0; t <= N; ++t) {
        coeffs[t].canonicalize();
        if (coeffs[t].get_den() != 1) throw std::logic_error("interpolated characteristic polynomial is not integral");
        out[t] = coeffs[t].get_num();
    }
    trim(out);
    return out;
}

IntegerPolynomial chebyshev_T(int n) {
    if (n < 0) throw std::invalid_argument("Chebyshev degree must be >= 0");
    IntegerPolynomial prev{1};
    if (n == 0) return prev;
    IntegerPolynomial cur{0, 1};
    for (int i = 1; i < n; ++i) {
        auto next = sub(shift_scale(cur, 2), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntegerPolynomial scaled_chebyshev(int n) {
    const auto T = chebyshev_T(n);
    IntegerPolynomial out(T.size());
    for (std::size_t j = 0; j < T.size(); ++j) {
        // 2 c_j (-1/2)^j
        Rational v = Rational(2 * T[j]);
        Integer pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(j));
        v /= pow2;
        if (j % 2 == 1) v = -v;
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("2 T_n(-x/2) has a non-integer coefficient");
        out[j] = v.get_num();
    }
    trim(out);
    return out;
}

bool chebyshev_identity_check(int n) {
    const auto target = scaled_chebyshev(n);
    return characteristic_polynomial_A(n) == target && characteristic_polynomial_by_determinant(n) == target;
}

std::string to_string(const IntegerPolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = p.size(); j-- > 0;) {
        if (p[j] == 0) continue;
        Integer c = p[j];
        if (!first) out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) out << "-";
        c = abs(c);
        if (c != 1 || j == 0) out << c.get_str();
        if (j > 0) out << (c != 1 ? "*" : "") << "l" << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    return out.str();
}

double max_eigenvalue_A(int n) {
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    return -2.0 * std::cos((2.0 * n - 1.0) * kPi / (2.0 * n));
}

double max_eigenvalue_A_numeric(int n) {
    auto ev = symmetric_eigenvalues(tridiagonal_A(n));
    return ev(ev.size() - 1);
}

double max_eigenvalue_B_numeric(int m) {
    auto ev = symmetric_eigenvalues(tridiagonal_B(m));
    return ev(ev.size() - 1);
}

// ---------------------------------------------------------------- constants

double paper_bound(int m) { return kPi * kPi / (4.0 * (m + 4.0) * (m + 4.0)); }

RationalInterval paper_bound_interval(int m) {
    const Rational denom = Rational(4 * (m + 4) * (m + 4));
    return {pi_lower() * pi_lower() / denom, pi_upper() * pi_upper() / denom};
}

double even_degree_constant(int n) { return kPi * kPi / (4.0 * (2.0 * n + 3.0) * (2.0 * n + 3.0)); }

double exact_min_eigenvalue_x2_squared(int m) {
    const double s = std::sin(kPi / (2.0 * m + 4.0));
    return s * s;
}

double even_min_eigenvalue_via_chebyshev(int n) { return (2.0 - max_eigenvalue_A(n + 1)) / 4.0; }

// ------------------------------------------------------------------ reports

SpectralReport min_quadratic_form_eigenvalue(const HomogeneousPolynomial& P, int m, EigenMethod method) {
    if (m < 0) throw std::invalid_argument("negative degree");
    if (!P.is_real()) throw std::invalid_argument("multiplication operator needs a real polynomial");
    if (P.is_zero()) throw std::invalid_argument("multiplication by zero has no coercivity constant");
    const int d = P.dimension();
    if (method == EigenMethod::Automatic) method = d == 2 ? EigenMethod::Fourier : EigenMethod::Monomial;
    if (method == EigenMethod::Fourier && d != 2) throw std::invalid_argument("Fourier route needs d = 2");

    SpectralReport report;
    report.degree = m;
    report.dimension = d;
    report.min_eigenvalue = method == EigenMethod::Fourier ? min_eigenvalue_fourier(P, m) : min_eigenvalue_monomial(P, m);
    report.paper_bound = paper_bound(m);
    report.margin = report.min_eigenvalue - report.paper_bound;
    if (is_x2_squared(P)) report.exact_closed_form = exact_min_eigenvalue_x2_squared(m);
    return report;
}

std::vector<SpectralReport> verify_main_inequality(int m_max, Execution execution, double tolerance) {
    if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
    const auto x2 = HomogeneousPolynomial::variable(2, 1);
    const auto P = x2 * x2;
    // One degree past m_max so the top odd degree has its transfer partner.
    std::vector<SpectralReport> all(static_cast<std::size_t>(m_max) + 2);
    for_each_index(all.size(), execution,
                   [&](std::size_t i) { all[i] = min_quadratic_form_eigenvalue(P, static_cast<int>(i)); });

    std::vector<SpectralReport> reports(all.begin(), all.end() - 1);
    for (auto& r : reports) {
        if (r.margin < -tolerance) {
            throw BoundViolated(r.degree, "min eigenvalue " + format_double(r.min_eigenvalue) + " below " +
                                              format_double(r.paper_bound));
        }
        if (r.degree % 2 == 0) {
            r.even_constant = even_degree_constant(r.degree / 2);
            if (r.min_eigenvalue < *r.even_constant - tolerance) {
                throw BoundViolated(r.degree, "even degree below its sharp constant");
            }
        } else {
            r.transfer_bound = all[static_cast<std::size_t>(r.degree) + 1].min_eigenvalue;
            if (r.min_eigenvalue < *r.transfer_bound - tolerance) {
                throw BoundViolated(r.degree, "odd degree below the bound transferred from degree m + 1");
            }
        }
    }
    return reports;
}

kernels::SineScan sine_bound_check(long long n_max, Execution execution) {
    if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
    return kernels::sine_bound_scan(2, n_max, execution);
}

std::string reports_to_csv(const std::vector<SpectralReport>& reports) {
    std::ostringstream out;
    out << "m,min_eigenvalue,paper_bound,margin,exact_closed_form\n";
    for (const auto& r : reports) {
        out << r.degree << ',' << format_double(r.min_eigenvalue) << ',' << format_double(r.paper_bound) << ','
            << format_double(r.margin) << ',' << (r.exact_closed_form ? format_double(*r.exact_closed_form) : "")
            << '\n';
    }
    return out.str();
}

}  // namespace polyharm::spectral
