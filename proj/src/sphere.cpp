#include "polyharm/sphere.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "polyharm/errors.hpp"
#include "polyharm/exact_linalg.hpp"
#include "polyharm/kernels.hpp"

namespace polyharm::sphere {

double surface_area(int dimension) {
    const double half = dimension / 2.0;
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

Rational monomial_sphere_integral(const MultiIndex& alpha) {
    // With alpha_i = 2 a_i:  Gamma(a_i + 1/2) = (2a_i)! / (4^{a_i} a_i!) sqrt(pi),
    // and omega = 2 pi^{d/2} / Gamma(d/2), so
    //   r = prod_i (2a_i)!/(4^{a_i} a_i!)  /  prod_{j < A} (d/2 + j),  A = sum a_i.
    const int d = alpha.dimension();
    Rational r = 1;
    int total = 0;
    for (int i = 0; i < d; ++i) {
        if (alpha[i] % 2 != 0) return 0;
        const unsigned a = static_cast<unsigned>(alpha[i] / 2);
        Integer pow4;
        mpz_ui_pow_ui(pow4.get_mpz_t(), 4, a);
        r *= Rational(factorial(2 * a), pow4 * factorial(a));
        total += static_cast<int>(a);
    }
    for (int j = 0; j < total; ++j) r /= Rational(d + 2 * j, 2);
    r.canonicalize();
    return r;
}

SphereInnerProductValue sphere_inner_product(const Polynomial& f, const Polynomial& g) {
    if (f.dimension() != g.dimension()) throw DimensionMismatch(f.dimension(), g.dimension());
    ComplexRational sum;
    for (const auto& [mf, pf] : f.parts()) {
        for (const auto& [mg, pg] : g.parts()) {
            if ((mf + mg) % 2 != 0) continue;
            for (const auto& [a, ca] : pf.terms()) {
                for (const auto& [b, cb] : pg.terms()) {
                    Rational r = monomial_sphere_integral(a + b);
                    if (sgn(r) == 0) continue;
                    sum += ca * cb.conj() * ComplexRational(r);
                }
            }
        }
    }
    return {sum, f.dimension()};
}

Rational norm_squared_ratio(const Polynomial& f) { return sphere_inner_product(f, f).rational_part.re; }

double l2_norm(const Polynomial& f) {
    return std::sqrt(norm_squared_ratio(f).get_d() * surface_area(f.dimension()));
}

// ------------------------------------------------------------ circle harmonics

double CircleHarmonic::evaluate(double t) const {
    if (is_zero()) return 0.0;
    const double scale = std::sqrt(scale_times_pi.get_d() / std::numbers::pi);
    const double x[2] = {std::cos(t), std::sin(t)};
    return scale * polynomial.evaluate(x).real();
}

CircleHarmonicPair circle_harmonic_basis(int kappa) {
    if (kappa < 0) throw std::invalid_argument("negative frequency");
    // (x1 + i x2)^kappa = sum_j C(kappa, j) x1^{kappa-j} (i x2)^j.
    HomogeneousPolynomial re(2, kappa);
    HomogeneousPolynomial im(2, kappa);
    for (int j = 0; j <= kappa; ++j) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(kappa), static_cast<unsigned long>(j));
        MultiIndex a{kappa - j, j};
        // i^j cycles 1, i, -1, -i.
        switch (j % 4) {
            case 0: re.add_term(a, ComplexRational(Rational(binom))); break;
            case 1: im.add_term(a, ComplexRational(Rational(binom))); break;
            case 2: re.add_term(a, ComplexRational(Rational(-binom))); break;
            default: im.add_term(a, ComplexRational(Rational(-binom))); break;
        }
    }
    CircleHarmonicPair pair;
    pair.cosine = {kappa, 0, re, kappa == 0 ? Rational(1, 2) : Rational(1)};
    pair.sine = {kappa, 1, im, im.is_zero() ? Rational(0) : Rational(1)};
    return pair;
}

Surd weighted_harmonic_product(const HomogeneousPolynomial& weight, const CircleHarmonic& a, const CircleHarmonic& b) {
    if (weight.dimension() != 2) throw std::invalid_argument("circle harmonics live in dimension 2");
    if (a.is_zero() || b.is_zero()) return {};
    // <w Y_a, Y_b> = sqrt(s_a s_b) / pi * r * omega_1 = 2 r sqrt(s_a s_b).
    Rational r = sphere_inner_product(Polynomial(weight * a.polynomial), Polynomial(b.polynomial)).rational_part.re;
    return Surd::make(2 * r, a.scale_times_pi * b.scale_times_pi);
}

Surd harmonic_inner_product(const CircleHarmonic& a, const CircleHarmonic& b) {
    return weighted_harmonic_product(HomogeneousPolynomial::constant(2, ComplexRational(1)), a, b);
}

// ----------------------------------------------------------- Gauss / Almansi

namespace {

// Splits f = |x|^2 q + h with Delta h = 0 by solving Delta(|x|^2 q) = Delta f.
std::pair<HomogeneousPolynomial, HomogeneousPolynomial> split_off_harmonic(const HomogeneousPolynomial& f) {
    const int d = f.dimension();
    const int n = f.degree();
    if (n < 2) return {HomogeneousPolynomial(d, 0), f};
    const auto in_basis = monomials_of_degree(d, n - 2);
    const auto out_basis = in_basis;  // Delta(|x|^2 q) has the degree of q
    const auto r2 = HomogeneousPolynomial::norm_squared(d);
    const std::size_t dim = in_basis.size();

    RationalMatrix A(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        auto col = (r2 * HomogeneousPolynomial::monomial(in_basis[j])).laplacian();
        for (std::size_t i = 0; i < dim; ++i) A(i, j) = col.coefficient(out_basis[i]).re;
    }
    auto lap = f.laplacian();
    RationalMatrix B(dim, 2);
    for (std::size_t i = 0; i < dim; ++i) {
        auto c = lap.coefficient(out_basis[i]);
        B(i, 0) = c.re;
        B(i, 1) = c.im;
    }
    auto X = bareiss_solve(A, B);
    if (!X) throw std::logic_error("|x|^2 split is singular; this cannot happen");
    HomogeneousPolynomial q(d, n - 2);
    for (std::size_t i = 0; i < dim; ++i) q.add_term(in_basis[i], ComplexRational((*X)(i, 0), (*X)(i, 1)));
    HomogeneousPolynomial h = f - r2 * q;
    return {q, h};
}

}  // namespace

HomogeneousPolynomial AlmansiDecomposition::reassemble() const {
    HomogeneousPolynomial sum(dimension, degree);
    const auto r2 = HomogeneousPolynomial::norm_squared(dimension);
    for (const auto& h : harmonics) {
        if (h.is_zero()) continue;
        sum += h * r2.power((degree - h.degree()) / 2);
    }
    return sum;
}

AlmansiDecomposition gauss_decompose(const HomogeneousPolynomial& f) {
    AlmansiDecomposition out;
    out.dimension = f.dimension();
    out.degree = f.degree();
    const int count = f.degree() / 2 + 1;
    out.harmonics.resize(static_cast<std::size_t>(count));
    HomogeneousPolynomial rest = f;
    for (int l = count - 1; l >= 0; --l) {
        const int deg = f.degree() % 2 + 2 * l;
        if (rest.is_zero()) {
            out.harmonics[static_cast<std::size_t>(l)] = HomogeneousPolynomial(f.dimension(), deg);
            continue;
        }
        auto [q, h] = split_off_harmonic(rest);
        out.harmonics[static_cast<std::size_t>(l)] = h.is_zero() ? HomogeneousPolynomial(f.dimension(), deg) : h;
        rest = deg >= 2 ? q : HomogeneousPolynomial(f.dimension(), 0);
    }
    return out;
}

// ------------------------------------------------------------------ sup norm

std::vector<double> sphere_sample_points(int dimension, const SamplingOptions& options) {
    std::vector<double> pts;
    if (dimension == 1) return {1.0, -1.0};
    if (dimension == 2) {
        const std::size_t n = options.circle_samples;
        pts.resize(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
            pts[2 * i] = std::cos(t);
            pts[2 * i + 1] = std::sin(t);
        }
        return pts;
    }
    const std::size_t n = options.sphere_samples;
    pts.resize(static_cast<std::size_t>(dimension) * n);
    if (dimension == 3) {
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (std::size_t i = 0; i < n; ++i) {
            const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden * static_cast<double>(i);
            pts[3 * i] = rho * std::cos(phi);
            pts[3 * i + 1] = rho * std::sin(phi);
            pts[3 * i + 2] = z;
        }
        return pts;
    }
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    for (std::size_t i = 0; i < n; ++i) {
        double norm2 = 0.0;
        double* p = &pts[i * static_cast<std::size_t>(dimension)];
        do {
            norm2 = 0.0;
            for (int k = 0; k < dimension; ++k) {
                p[k] = normal(rng);
                norm2 += p[k] * p[k];
            }
        } while (norm2 == 0.0);
        const double inv = 1.0 / std::sqrt(norm2);
        for (int k = 0; k < dimension; ++k) p[k] *= inv;
    }
    return pts;
}

double certified_sup_bound(const HomogeneousPolynomial& f) {
    if (f.is_zero()) return 0.0;
    const double ratio = norm_squared_ratio(Polynomial(f)).get_d();
    return std::sqrt(2.0 * ratio) * std::pow(1.0 + f.degree(), (f.dimension() - 1) / 2.0);
}

SupNormEstimate sup_norm_estimate(const HomogeneousPolynomial& f, const SamplingOptions& options,
                                  Execution execution) {
    SupNormEstimate est;
    if (f.is_zero()) return est;
    const auto pts = sphere_sample_points(f.dimension(), options);
    est.samples = pts.size() / static_cast<std::size_t>(f.dimension());
    est.sampled = kernels::max_abs(CompiledPolynomial(Polynomial(f)), pts, execution);
    est.certified_bound = certified_sup_bound(f);
    return est;
}

}  // namespace polyharm::sphere
