#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyharm/multi_index.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

/// Homogeneous polynomial of a fixed degree over Q(i). Zero coefficients are
/// never stored, and every stored multi-index has |alpha| == degree().
class HomogeneousPolynomial {
public:
    using Terms = std::map<MultiIndex, ComplexRational>;

    HomogeneousPolynomial() = default;
    HomogeneousPolynomial(int dimension, int degree);

    static HomogeneousPolynomial monomial(const MultiIndex& alpha, ComplexRational coeff = ComplexRational(1));
    static HomogeneousPolynomial constant(int dimension, ComplexRational value);
    /// x_i (0-based i).
    static HomogeneousPolynomial variable(int dimension, int i);
    /// |x|^2 = x_1^2 + ... + x_d^2.
    static HomogeneousPolynomial norm_squared(int dimension);

    [[nodiscard]] int dimension() const { return dim_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_real() const;
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] ComplexRational coefficient(const MultiIndex& alpha) const;
    void add_term(const MultiIndex& alpha, const ComplexRational& coeff);

    HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o);
    HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& o);
    HomogeneousPolynomial& operator*=(const ComplexRational& c);

    friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a += b; }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a -= b; }
    friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, const ComplexRational& c) { return a *= c; }
    friend HomogeneousPolynomial operator*(const ComplexRational& c, HomogeneousPolynomial a) { return a *= c; }
    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a) { return a *= ComplexRational(-1); }
    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

    /// Coefficient-wise complex conjugate (P -> P*).
    [[nodiscard]] HomogeneousPolynomial conj() const;
    [[nodiscard]] HomogeneousPolynomial power(int exponent) const;

    /// d/dx_i applied `order` times.
    [[nodiscard]] HomogeneousPolynomial derivative(int i, int order = 1) const;
    /// d^gamma.
    [[nodiscard]] HomogeneousPolynomial derivative(const MultiIndex& gamma) const;
    [[nodiscard]] HomogeneousPolynomial laplacian() const;

    [[nodiscard]] std::complex<double> evaluate(std::span<const double> x) const;

private:
    Terms terms_;
    int dim_ = 0;
    int degree_ = 0;
};

/// Polynomial stored as its graded components; parts() never holds a zero part.
class Polynomial {
public:
    using Parts = std::map<int, HomogeneousPolynomial>;

    Polynomial() = default;
    explicit Polynomial(int dimension);
    Polynomial(const HomogeneousPolynomial& part);  // NOLINT(google-explicit-constructor)

    static Polynomial constant(int dimension, ComplexRational value);
    static Polynomial variable(int dimension, int i);

    [[nodiscard]] int dimension() const { return dim_; }
    /// Highest nonzero degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return parts_.empty() ? -1 : parts_.rbegin()->first; }
    [[nodiscard]] bool is_zero() const { return parts_.empty(); }
    [[nodiscard]] bool is_real() const;
    [[nodiscard]] const Parts& parts() const { return parts_; }
    /// Part of degree m (zero polynomial of that degree when absent).
    [[nodiscard]] HomogeneousPolynomial part(int m) const;
    [[nodiscard]] std::size_t term_count() const;

    void add_term(const MultiIndex& alpha, const ComplexRational& coeff);
    void add(const HomogeneousPolynomial& part);
    void subtract(const HomogeneousPolynomial& part);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const ComplexRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const ComplexRational& c) { return a *= c; }
    friend Polynomial operator*(const ComplexRational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a) { return a *= ComplexRational(-1); }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    [[nodiscard]] Polynomial conj() const;
    [[nodiscard]] Polynomial power(int exponent) const;
    [[nodiscard]] Polynomial derivative(const MultiIndex& gamma) const;
    [[nodiscard]] Polynomial laplacian() const;

    /// Plain double evaluation; see CompiledPolynomial for the compensated variant.
    [[nodiscard]] std::complex<double> evaluate(std::span<const double> x) const;

private:
    Parts parts_;
    int dim_ = 0;
};

/// Graded components of f: the map degree -> homogeneous part (zero parts omitted).
std::map<int, HomogeneousPolynomial> graded_parts(const Polynomial& f);

/// Q(D) f: substitute d/dx_j for x_j in Q. Q's coefficients are used as given;
/// pass Q.conj() where Q*(D) is meant.
Polynomial apply_operator(const Polynomial& Q, const Polynomial& f);

/// Delta^k f. `dimension` must equal f.dimension().
Polynomial laplacian_power(const Polynomial& f, int k, int dimension);
HomogeneousPolynomial laplacian_power(const HomogeneousPolynomial& f, int k);

/// [P, Q]_F = sum_alpha alpha! c_alpha conj(d_alpha) = (Q*(D) P)(0).
ComplexRational fischer_inner_product(const Polynomial& P, const Polynomial& Q);

/// Parses expressions such as "x1^2 - 3/2*x1*x2 + (x1+x2)^3 + i*x2".
/// Variables are x1..xd; `i` is the imaginary unit.
Polynomial parse_polynomial(std::string_view text, int dimension);

std::string to_string(const ComplexRational& c);
std::string to_string(const HomogeneousPolynomial& f);
std::string to_string(const Polynomial& f);

/// Float snapshot of a polynomial for repeated evaluation at real points.
/// Sums graded parts in increasing degree with Neumaier compensation.
class CompiledPolynomial {
public:
    CompiledPolynomial() = default;
    explicit CompiledPolynomial(const Polynomial& f);

    [[nodiscard]] int dimension() const { return dim_; }
    [[nodiscard]] std::complex<double> operator()(std::span<const double> x) const;

private:
    struct Term {
        std::array<std::uint16_t, kMaxDimension> exps{};
        std::complex<double> coeff;
    };
    std::vector<std::vector<Term>> by_degree_;
    int dim_ = 0;
};

}  // namespace polyharm
