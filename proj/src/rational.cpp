#include "polyharm/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace polyharm {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

bool perfect_square(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return false;
    }
    Integer rn;
    Integer rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer p(n, 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in rational literal");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite double has no rational value");
    return Rational(value);
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
    if (is_real() && o.is_real()) {
        re *= o.re;
        return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.is_real()) {
        re /= o.re;
        im /= o.re;
        return *this;
    }
    Rational norm = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / norm;
    Rational i = (im * o.re - re * o.im) / norm;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Surd Surd::make(Rational coeff, Rational radicand) {
    if (sgn(radicand) < 0) throw std::domain_error("negative radicand");
    if (sgn(radicand) == 0 || sgn(coeff) == 0) return {Rational(0), Rational(1)};
    Rational root;
    if (perfect_square(radicand, root)) return {coeff * root, Rational(1)};
    // Pull a factor of 2 out so sqrt(1/2) and sqrt(2) share a representation.
    Rational half = radicand / 2;
    if (perfect_square(half, root)) return {coeff * root, Rational(2)};
    return {std::move(coeff), std::move(radicand)};
}

double Surd::to_double() const { return coeff.get_d() * std::sqrt(radicand.get_d()); }

}  // namespace polyharm
