#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace polyharm {

/// Arbitrary-precision rational number.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on anything else
/// (decimal points and exponents are rejected).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string format_rational(const Rational& value);

Integer factorial(unsigned n);

/// Exact rational nearest to a double (the double's binary value).
Rational rational_from_double(double value);

/// Element of Q(i). All polynomial coefficients live here.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational real) : re(std::move(real)), im(0) {}
    ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    ComplexRational(long value) : re(value), im(0) {}
    ComplexRational(int value) : re(value), im(0) {}

    [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    [[nodiscard]] bool is_real() const { return sgn(im) == 0; }
    [[nodiscard]] ComplexRational conj() const { return {re, -im}; }
    [[nodiscard]] std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o);
    ComplexRational& operator/=(const ComplexRational& o);

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
inline ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
inline ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
inline ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
inline ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }

/// Value coeff * sqrt(radicand) with radicand >= 0. Used for the normalized
/// circle harmonics whose pairwise products carry factors like sqrt(2).
struct Surd {
    Rational coeff;
    Rational radicand{1};

    /// Folds perfect-square radicands into the coefficient.
    static Surd make(Rational coeff, Rational radicand);

    [[nodiscard]] double to_double() const;
    [[nodiscard]] int sign() const { return sgn(radicand) == 0 ? 0 : sgn(coeff); }
    [[nodiscard]] Rational squared() const { return coeff * coeff * radicand; }

    friend bool operator==(const Surd& a, const Surd& b) {
        return a.sign() == b.sign() && a.squared() == b.squared();
    }
};

}  // namespace polyharm
