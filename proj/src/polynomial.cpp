#include "polyharm/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

void require_same_dimension(int a, int b) {
    if (a != b) throw DimensionMismatch(a, b);
}

void accumulate(HomogeneousPolynomial::Terms& terms, const MultiIndex& alpha, const ComplexRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace

// ---------------------------------------------------------------- homogeneous

HomogeneousPolynomial::HomogeneousPolynomial(int dimension, int degree) : dim_(dimension), degree_(degree) {
    if (dimension < 1 || dimension > kMaxDimension) throw std::invalid_argument("dimension out of range");
    if (degree < 0) throw std::invalid_argument("negative degree");
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(const MultiIndex& alpha, ComplexRational coeff) {
    HomogeneousPolynomial p(alpha.dimension(), alpha.degree());
    p.add_term(alpha, coeff);
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::constant(int dimension, ComplexRational value) {
    return monomial(MultiIndex(dimension), std::move(value));
}

HomogeneousPolynomial HomogeneousPolynomial::variable(int dimension, int i) {
    MultiIndex a(dimension);
    a.set(i, 1);
    return monomial(a);
}

HomogeneousPolynomial HomogeneousPolynomial::norm_squared(int dimension) {
    HomogeneousPolynomial p(dimension, 2);
    for (int i = 0; i < dimension; ++i) {
        MultiIndex a(dimension);
        a.set(i, 2);
        p.add_term(a, ComplexRational(1));
    }
    return p;
}

bool HomogeneousPolynomial::is_real() const {
    for (const auto& [a, c] : terms_) {
        if (!c.is_real()) return false;
    }
    return true;
}

ComplexRational HomogeneousPolynomial::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? ComplexRational() : it->second;
}

void HomogeneousPolynomial::add_term(const MultiIndex& alpha, const ComplexRational& coeff) {
    require_same_dimension(dim_, alpha.dimension());
    if (alpha.degree() != degree_) {
        throw std::invalid_argument("term of degree " + std::to_string(alpha.degree()) +
                                    " added to homogeneous polynomial of degree " + std::to_string(degree_));
    }
    accumulate(terms_, alpha, coeff);
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& o) {
    if (o.is_zero()) return *this;
    require_same_dimension(dim_, o.dim_);
    if (degree_ != o.degree_) {
        if (!is_zero()) throw std::invalid_argument("adding homogeneous polynomials of different degrees");
        degree_ = o.degree_;
    }
    for (const auto& [a, c] : o.terms_) accumulate(terms_, a, c);
    return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator-=(const HomogeneousPolynomial& o) {
    if (o.is_zero()) return *this;
    require_same_dimension(dim_, o.dim_);
    if (degree_ != o.degree_) {
        if (!is_zero()) throw std::invalid_argument("subtracting homogeneous polynomials of different degrees");
        degree_ = o.degree_;
    }
    for (const auto& [a, c] : o.terms_) accumulate(terms_, a, -c);
    return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(const ComplexRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) v *= c;
    return *this;
}

HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    require_same_dimension(a.dim_, b.dim_);
    HomogeneousPolynomial r(a.dim_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) accumulate(r.terms_, ea + eb, ca * cb);
    }
    return r;
}

bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return a.dim_ == b.dim_;
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomogeneousPolynomial HomogeneousPolynomial::conj() const {
    HomogeneousPolynomial r = *this;
    for (auto& [a, c] : r.terms_) c.im = -c.im;
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::power(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative power");
    HomogeneousPolynomial r = constant(dim_, ComplexRational(1));
    HomogeneousPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) r = r * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::derivative(int i, int order) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("variable index out of range");
    if (order == 0) return *this;
    HomogeneousPolynomial r(dim_, std::max(degree_ - order, 0));
    if (degree_ < order) return r;
    for (const auto& [a, c] : terms_) {
        int e = a[i];
        if (e < order) continue;
        Integer falling = 1;
        for (int t = 0; t < order; ++t) falling *= e - t;
        MultiIndex b = a;
        b.set(i, e - order);
        accumulate(r.terms_, b, c * ComplexRational(Rational(falling)));
    }
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::derivative(const MultiIndex& gamma) const {
    require_same_dimension(dim_, gamma.dimension());
    HomogeneousPolynomial r = *this;
    for (int i = 0; i < dim_; ++i) {
        if (gamma[i] > 0) r = r.derivative(i, gamma[i]);
    }
    return r;
}

HomogeneousPolynomial HomogeneousPolynomial::laplacian() const {
    HomogeneousPolynomial r(dim_, std::max(degree_ - 2, 0));
    if (degree_ < 2) return r;
    for (const auto& [a, c] : terms_) {
        for (int i = 0; i < dim_; ++i) {
            int e = a[i];
            if (e < 2) continue;
            MultiIndex b = a;
            b.set(i, e - 2);
            accumulate(r.terms_, b, c * ComplexRational(Rational(e * (e - 1))));
        }
    }
    return r;
}

std::complex<double> HomogeneousPolynomial::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch(static_cast<int>(x.size()), dim_);
    std::complex<double> sum = 0.0;
    for (const auto& [a, c] : terms_) {
        double m = 1.0;
        for (int i = 0; i < dim_; ++i) m *= std::pow(x[static_cast<std::size_t>(i)], a[i]);
        sum += c.to_complex() * m;
    }
    return sum;
}

// ----------------------------------------------------------------- polynomial

Polynomial::Polynomial(int dimension) : dim_(dimension) {
    if (dimension < 1 || dimension > kMaxDimension) throw std::invalid_argument("dimension out of range");
}

Polynomial::Polynomial(const HomogeneousPolynomial& part) : dim_(part.dimension()) {
    if (!part.is_zero()) parts_.emplace(part.degree(), part);
}

Polynomial Polynomial::constant(int dimension, ComplexRational value) {
    return Polynomial(HomogeneousPolynomial::constant(dimension, std::move(value)));
}

Polynomial Polynomial::variable(int dimension, int i) { return Polynomial(HomogeneousPolynomial::variable(dimension, i)); }

bool Polynomial::is_real() const {
    for (const auto& [m, p] : parts_) {
        if (!p.is_real()) return false;
    }
    return true;
}

HomogeneousPolynomial Polynomial::part(int m) const {
    auto it = parts_.find(m);
    return it == parts_.end() ? HomogeneousPolynomial(dim_, m) : it->second;
}

std::size_t Polynomial::term_count() const {
    std::size_t n = 0;
    for (const auto& [m, p] : parts_) n += p.size();
    return n;
}

void Polynomial::add_term(const MultiIndex& alpha, const ComplexRational& coeff) {
    add(HomogeneousPolynomial::monomial(alpha, coeff));
}

void Polynomial::add(const HomogeneousPolynomial& part) {
    if (part.is_zero()) return;
    require_same_dimension(dim_, part.dimension());
    auto [it, inserted] = parts_.try_emplace(part.degree(), part);
    if (!inserted) {
        it->second += part;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

void Polynomial::subtract(const HomogeneousPolynomial& part) {
    if (part.is_zero()) return;
    add(-part);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.dim_ != 0) require_same_dimension(dim_, o.dim_);
    for (const auto& [m, p] : o.parts_) add(p);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.dim_ != 0) require_same_dimension(dim_, o.dim_);
    for (const auto& [m, p] : o.parts_) subtract(p);
    return *this;
}

Polynomial& Polynomial::operator*=(const ComplexRational& c) {
    if (c.is_zero()) {
        parts_.clear();
        return *this;
    }
    for (auto& [m, p] : parts_) p *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_dimension(a.dim_, b.dim_);
    Polynomial r(a.dim_);
    for (const auto& [ma, pa] : a.parts_) {
        for (const auto& [mb, pb] : b.parts_) r.add(pa * pb);
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.dim_ == b.dim_ && a.parts_ == b.parts_; }

Polynomial Polynomial::conj() const {
    Polynomial r(dim_);
    for (const auto& [m, p] : parts_) r.parts_.emplace(m, p.conj());
    return r;
}

Polynomial Polynomial::power(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(dim_, ComplexRational(1));
    for (int i = 0; i < exponent; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(const MultiIndex& gamma) const {
    Polynomial r(dim_);
    for (const auto& [m, p] : parts_) {
        if (m >= gamma.degree()) r.add(p.derivative(gamma));
    }
    return r;
}

Polynomial Polynomial::laplacian() const {
    Polynomial r(dim_);
    for (const auto& [m, p] : parts_) r.add(p.laplacian());
    return r;
}

std::complex<double> Polynomial::evaluate(std::span<const double> x) const {
    std::complex<double> sum = 0.0;
    for (const auto& [m, p] : parts_) sum += p.evaluate(x);
    return sum;
}

// ------------------------------------------------------------------ operators

std::map<int, HomogeneousPolynomial> graded_parts(const Polynomial& f) { return f.parts(); }

Polynomial apply_operator(const Polynomial& Q, const Polynomial& f) {
    require_same_dimension(Q.dimension(), f.dimension());
    Polynomial r(f.dimension());
    for (const auto& [mq, q] : Q.parts()) {
        for (const auto& [gamma, c] : q.terms()) {
            Polynomial d = f.derivative(gamma);
            d *= c;
            r += d;
        }
    }
    return r;
}

HomogeneousPolynomial laplacian_power(const HomogeneousPolynomial& f, int k) {
    if (k < 1) throw std::invalid_argument("laplacian power must be >= 1");
    HomogeneousPolynomial r = f;
    for (int i = 0; i < k; ++i) r = r.laplacian();
    return r;
}

Polynomial laplacian_power(const Polynomial& f, int k, int dimension) {
    require_same_dimension(f.dimension(), dimension);
    if (k < 1) throw std::invalid_argument("laplacian power must be >= 1");
    Polynomial r = f;
    for (int i = 0; i < k; ++i) r = r.laplacian();
    return r;
}

ComplexRational fischer_inner_product(const Polynomial& P, const Polynomial& Q) {
    require_same_dimension(P.dimension(), Q.dimension());
    ComplexRational sum;
    for (const auto& [m, p] : P.parts()) {
        auto it = Q.parts().find(m);
        if (it == Q.parts().end()) continue;
        for (const auto& [alpha, c] : p.terms()) {
            ComplexRational d = it->second.coefficient(alpha);
            if (d.is_zero()) continue;
            sum += c * d.conj() * ComplexRational(Rational(alpha.factorial()));
        }
    }
    return sum;
}

// --------------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(std::string_view text, int dimension) : s_(text), dim_(dimension) {}

    Polynomial parse() {
        Polynomial r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    Polynomial expr() {
        Polynomial r = term();
        for (;;) {
            if (accept('+')) {
                r += term();
            } else if (accept('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }

    Polynomial term() {
        Polynomial r = unary();
        for (;;) {
            if (accept('*')) {
                r = r * unary();
            } else if (accept('/')) {
                Polynomial d = unary();
                if (d.degree() != 0) fail("division only by nonzero constants");
                ComplexRational c = d.part(0).coefficient(MultiIndex(dim_));
                r *= ComplexRational(1) / c;
            } else {
                return r;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        Polynomial base = primary();
        if (accept('^')) {
            Integer e = integer();
            if (e > 4096) fail("exponent too large");
            return base.power(static_cast<int>(e.get_si()));
        }
        return base;
    }

    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Polynomial::constant(dim_, ComplexRational(Rational(integer())));
        }
        if (c == 'i') {
            ++pos_;
            return Polynomial::constant(dim_, ComplexRational(Rational(0), Rational(1)));
        }
        if (c == 'x') {
            ++pos_;
            Integer idx = integer();
            if (idx < 1 || idx > dim_) fail("variable index out of range");
            return Polynomial::variable(dim_, static_cast<int>(idx.get_si()) - 1);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    int dim_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int dimension) { return Parser(text, dimension).parse(); }

// ------------------------------------------------------------------- printing

std::string to_string(const ComplexRational& c) {
    if (c.is_real()) return format_rational(c.re);
    if (sgn(c.re) == 0) return format_rational(c.im) + "*i";
    return "(" + format_rational(c.re) + (sgn(c.im) > 0 ? "+" : "") + format_rational(c.im) + "*i)";
}

std::string to_string(const HomogeneousPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        for (int i = 0; i < a.dimension(); ++i) {
            if (a[i] == 0) continue;
            os << "*x" << (i + 1);
            if (a[i] > 1) os << '^' << a[i];
        }
    }
    return os.str();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (auto it = f.parts().rbegin(); it != f.parts().rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += to_string(it->second);
    }
    return s;
}

// ------------------------------------------------------------------- compiled

CompiledPolynomial::CompiledPolynomial(const Polynomial& f) : dim_(f.dimension()) {
    by_degree_.resize(static_cast<std::size_t>(std::max(f.degree() + 1, 0)));
    for (const auto& [m, p] : f.parts()) {
        auto& bucket = by_degree_[static_cast<std::size_t>(m)];
        for (const auto& [a, c] : p.terms()) {
            Term t;
            for (int i = 0; i < dim_; ++i) t.exps[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(a[i]);
            t.coeff = c.to_complex();
            bucket.push_back(t);
        }
    }
}

std::complex<double> CompiledPolynomial::operator()(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch(static_cast<int>(x.size()), dim_);
    // Neumaier summation, separately for real and imaginary parts.
    double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
    auto add = [](double& s, double& c, double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v)) {
            c += (s - t) + v;
        } else {
            c += (v - t) + s;
        }
        s = t;
    };
    for (const auto& bucket : by_degree_) {
        for (const auto& t : bucket) {
            double m = 1.0;
            for (int i = 0; i < dim_; ++i) {
                auto e = t.exps[static_cast<std::size_t>(i)];
                if (e != 0) m *= std::pow(x[static_cast<std::size_t>(i)], static_cast<int>(e));
            }
            add(sr, cr, t.coeff.real() * m);
            add(si, ci, t.coeff.imag() * m);
        }
    }
    return {sr + cr, si + ci};
}

}  // namespace polyharm
