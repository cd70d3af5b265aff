#include "polyharm/entire.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polyharm/errors.hpp"
#include "polyharm/format.hpp"

namespace polyharm::entire {

// ------------------------------------------------------------------- series

EntireSeries::EntireSeries(int dimension, int truncation) : dim_(dimension) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    parts_.reserve(static_cast<std::size_t>(truncation) + 1);
    for (int m = 0; m <= truncation; ++m) parts_.emplace_back(dimension, m);
}

EntireSeries EntireSeries::from_polynomial(const Polynomial& f, int truncation) {
    if (f.degree() > truncation) throw std::invalid_argument("polynomial degree exceeds the truncation");
    EntireSeries s(f.dimension(), truncation);
    for (const auto& [m, part] : f.parts()) s.set_part(m, part);
    return s;
}

void EntireSeries::set_part(int m, HomogeneousPolynomial f_m) {
    if (m < 0 || m > truncation()) throw std::out_of_range("part index outside the truncation");
    if (f_m.dimension() != dim_) throw DimensionMismatch(f_m.dimension(), dim_);
    if (f_m.is_zero()) f_m = HomogeneousPolynomial(dim_, m);
    if (f_m.degree() != m) throw std::invalid_argument("part has the wrong degree");
    parts_[static_cast<std::size_t>(m)] = std::move(f_m);
}

Polynomial EntireSeries::truncated() const {
    Polynomial f(dim_);
    for (const auto& part : parts_) f.add(part);
    return f;
}

int EntireSeries::highest_nonzero_degree() const {
    for (int m = truncation(); m >= 0; --m)
        if (!parts_[static_cast<std::size_t>(m)].is_zero()) return m;
    return -1;
}

namespace {

Rational rational_power(const Rational& c, int m) {
    Rational r = 1;
    for (int i = 0; i < m; ++i) r *= c;
    return r;
}

}  // namespace

EntireSeries exp_series(int dimension, int truncation, int variable, const Rational& c) {
    EntireSeries s(dimension, truncation);
    const auto x = HomogeneousPolynomial::variable(dimension, variable);
    for (int m = 0; m <= truncation; ++m) {
        Rational coeff = rational_power(c, m) / Rational(factorial(static_cast<unsigned>(m)));
        s.set_part(m, x.power(m) * ComplexRational(coeff));
    }
    s.set_generator({"exp", {{"variable", std::to_string(variable)}, {"c", format_rational(c)}}});
    return s;
}

EntireSeries sin_exp_series(int truncation, const Rational& c) {
    EntireSeries s(2, truncation);
    HomogeneousPolynomial w(2, 1);  // x2 + i x1
    w.add_term(MultiIndex{0, 1}, ComplexRational(1));
    w.add_term(MultiIndex{1, 0}, ComplexRational(0, 1));
    HomogeneousPolynomial wm = HomogeneousPolynomial::constant(2, ComplexRational(1));
    for (int m = 0; m <= truncation; ++m) {
        if (m > 0) wm = wm * w;
        const Rational scale = rational_power(c, m) / Rational(factorial(static_cast<unsigned>(m)));
        HomogeneousPolynomial part(2, m);
        for (const auto& [alpha, coeff] : wm.terms())
            if (sgn(coeff.im) != 0) part.add_term(alpha, ComplexRational(coeff.im * scale));
        s.set_part(m, std::move(part));
    }
    s.set_generator({"sin_exp", {{"c", format_rational(c)}}});
    return s;
}

EntireSeries bessel_series(int dimension, int truncation) {
    EntireSeries s(dimension, truncation);
    const auto x = HomogeneousPolynomial::variable(dimension, 0);
    for (int m = 0; m <= truncation; ++m) {
        const Integer f = factorial(static_cast<unsigned>(m));
        s.set_part(m, x.power(m) * ComplexRational(Rational(Integer(1), f * f)));
    }
    s.set_generator({"bessel", {}});
    return s;
}

EntireSeries synthetic_order_series(int dimension, int truncation, double rho) {
    if (!(rho > 0)) throw std::invalid_argument("synthetic order must be positive");
    EntireSeries s(dimension, truncation);
    const auto x = HomogeneousPolynomial::variable(dimension, 0);
    for (int m = 0; m <= truncation; ++m) {
        const double c = m == 0 ? 1.0 : std::exp(-(m / rho) * std::log(static_cast<double>(m)));
        if (c == 0.0) throw std::range_error("synthetic coefficient underflows at degree " + std::to_string(m));
        s.set_part(m, x.power(m) * ComplexRational(rational_from_double(c)));
    }
    s.set_generator({"synthetic", {{"rho", format_double(rho)}}});
    return s;
}

EntireSeries extend(const EntireSeries& f, int truncation) {
    if (!f.generator()) throw std::invalid_argument("series has no generator to extend from");
    const auto& g = *f.generator();
    auto param = [&](const std::string& key) -> const std::string& {
        auto it = g.params.find(key);
        if (it == g.params.end()) throw std::invalid_argument("generator '" + g.name + "' lacks parameter " + key);
        return it->second;
    };
    if (g.name == "exp") {
        return exp_series(f.dimension(), truncation, std::stoi(param("variable")), parse_rational(param("c")));
    }
    if (g.name == "sin_exp") return sin_exp_series(truncation, parse_rational(param("c")));
    if (g.name == "bessel") return bessel_series(f.dimension(), truncation);
    if (g.name == "synthetic") return synthetic_order_series(f.dimension(), truncation, std::stod(param("rho")));
    throw std::invalid_argument("unknown generator '" + g.name + "'");
}

// ---------------------------------------------------------- order and type

namespace {

struct Fit {
    Eigen::Vector4d coeffs;
    bool ok = false;
};

// -log||f_m|| = a m log m + b m + c log m + e by least squares.
Fit fit_decay(const std::vector<std::pair<int, double>>& points) {
    Fit fit;
    if (points.size() < 4) return fit;
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd X(n, 4);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double m = points[static_cast<std::size_t>(i)].first;
        X(i, 0) = m * std::log(m);
        X(i, 1) = m;
        X(i, 2) = std::log(m);
        X(i, 3) = 1.0;
        y(i) = points[static_cast<std::size_t>(i)].second;
    }
    // Column scaling keeps the QR well conditioned.
    Eigen::Vector4d scale;
    for (int j = 0; j < 4; ++j) {
        scale(j) = X.col(j).norm();
        X.col(j) /= scale(j);
    }
    Eigen::Vector4d c = X.colPivHouseholderQr().solve(y);
    fit.coeffs = c.cwiseQuotient(scale);
    fit.ok = fit.coeffs.allFinite();
    return fit;
}

double order_from_fit(const Fit& fit) {
    return fit.coeffs(0) > 0 ? 1.0 / fit.coeffs(0) : std::numeric_limits<double>::infinity();
}

double type_from_fit(const Fit& fit, double rho) {
    return std::exp(-fit.coeffs(1) * rho) / (std::numbers::e * rho);
}

}  // namespace

OrderTypeEstimate order_estimate(const EntireSeries& f, const OrderOptions& options) {
    const int N = f.truncation();
    if (N < 8) throw std::invalid_argument("order estimate needs truncation >= 8");
    OrderTypeEstimate est;
    est.window_start = N / 2;
    est.window_end = N;
    est.sup_norms.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (int m = 0; m <= N; ++m) {
        const auto& part = f.part(m);
        if (part.is_zero()) continue;
        est.sup_norms[static_cast<std::size_t>(m)] =
            options.sampled ? sphere::sup_norm_estimate(part, options.sampling, options.execution).sampled
                            : sphere::certified_sup_bound(part);
    }

    std::vector<std::pair<int, double>> tail;
    for (int m = std::max(est.window_start, 2); m <= N; ++m) {
        const double s = est.sup_norms[static_cast<std::size_t>(m)];
        if (s > 0) tail.emplace_back(m, -std::log(s));
    }
    if (tail.empty()) throw AllZeroTail();

    for (const auto& [m, L] : tail) {
        if (L > 0) est.raw_order_sequence[m] = m * std::log(static_cast<double>(m)) / L;
    }
    for (const auto& [m, a] : est.raw_order_sequence) est.raw_order = std::max(est.raw_order, a);

    const Fit full = fit_decay(tail);
    if (full.ok) {
        est.method = "regression";
        est.order = order_from_fit(full);
        est.fit.assign(full.coeffs.data(), full.coeffs.data() + 4);
    } else {
        est.method = "raw-limsup";
        est.order = est.raw_order;
    }

    if (std::isfinite(est.order) && est.order > 0) {
        for (const auto& [m, L] : tail) est.raw_type_sequence[m] = m * std::exp(-L * est.order / m) / (std::numbers::e * est.order);
        if (full.ok) {
            const double tau = type_from_fit(full, est.order);
            // Report the type only when fits on both halves of the window agree with it.
            const std::size_t half = tail.size() / 2;
            const Fit lower = fit_decay({tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(half)});
            const Fit upper = fit_decay({tail.begin() + static_cast<std::ptrdiff_t>(half), tail.end()});
            auto agrees = [&](const Fit& part) {
                if (!part.ok) return false;
                const double rho = order_from_fit(part);
                if (!std::isfinite(rho) || rho <= 0) return false;
                return std::abs(type_from_fit(part, rho) - tau) <= options.type_stability * tau;
            };
            if (std::isfinite(tau) && tau > 0 && agrees(lower) && agrees(upper)) est.type = tau;
        }
    }
    return est;
}

// ------------------------------------------------------------ decomposition

double order_gate(const FischerProblem& problem, const GrowthConstants& constants) {
    if (constants.alpha <= 0) return std::numeric_limits<double>::infinity();
    return problem.degree_drop() / constants.alpha;
}

EntireDecomposition decompose_entire(const FischerProblem& problem, const EntireSeries& f,
                                     const DecomposeOptions& options) {
    if (f.dimension() != problem.dimension) throw DimensionMismatch(f.dimension(), problem.dimension);
    const int d = problem.dimension;
    const int N = f.truncation();
    const int two_k = 2 * problem.k;
    const FischerOperator op(problem);

    std::vector<DecompositionResult> per_degree(static_cast<std::size_t>(N) + 1);
    for_each_index(per_degree.size(), options.execution, [&](std::size_t m) {
        const auto& part = f.part(static_cast<int>(m));
        if (part.is_zero()) {
            per_degree[m].quotient = Polynomial(d);
            per_degree[m].remainder = Polynomial(d);
            return;
        }
        per_degree[m] = decompose_recursive(op, Polynomial(part));
    });

    // Regrade after the barrier, in increasing m so the result is order-independent.
    Polynomial q(d);
    Polynomial h(d);
    for (const auto& r : per_degree) {
        q += r.quotient;
        h += r.remainder;
    }

    EntireDecomposition out;
    out.quotient = EntireSeries(d, std::max(N - two_k, 0));
    for (const auto& [M, G] : q.parts()) out.quotient.set_part(M, G);
    out.remainder = EntireSeries(d, N);
    for (const auto& [M, part] : h.parts()) out.remainder.set_part(M, part);
    out.certificate = certify(problem, f.truncated(), q, h);
    out.gate = order_gate(problem, options.constants);

    if (options.estimate_order && N >= 8) {
        try {
            const auto est = order_estimate(f, options.order);
            out.data_order = est.order;
            if (est.order >= out.gate) {
                out.warnings.push_back("order estimate " + format_double(est.order) + " is not below the gate " +
                                       format_double(out.gate) + "; certificates are still exact");
            }
            if (options.constants.alpha > 0 && est.type && std::isfinite(est.order) && est.order > 0) {
                const double drop = problem.degree_drop();
                double d_sum = 0.0;
                for (const auto& [s, P_s] : problem.lower) {
                    if (!P_s.is_zero()) d_sum += sphere::sup_norm_estimate(P_s, options.order.sampling).sampled;
                }
                const double e = drop / est.order;
                const double value = std::pow(two_k / drop, e) * options.constants.C * d_sum *
                                     std::pow(std::numbers::e * est.order * *est.type, e);
                out.small_type_value = value;
                out.small_type_holds = value < 1.0;
            }
        } catch (const AllZeroTail&) {
            out.data_order = 0.0;
        }
    }

    const double omega = sphere::surface_area(d);
    for (int M = 0; M <= out.quotient.truncation(); ++M) {
        TailRow row;
        row.degree = M;
        const auto& G = out.quotient.part(M);
        row.norm = G.is_zero() ? 0.0 : sphere::l2_norm(Polynomial(G));
        if (out.data_order && *out.data_order > 0 && std::isfinite(*out.data_order)) {
            const double log_shape = 0.5 * std::log(2.0 / omega) + 0.5 * (d - 1) * std::log(M + 1.0) -
                                     (M + two_k) / *out.data_order * std::log(static_cast<double>(M + two_k));
            row.bound_shape = std::exp(log_shape);
        }
        out.tail.push_back(row);
    }
    return out;
}

OrderComparison order_of_decomposition(const EntireSeries& f, const EntireSeries& q, const EntireSeries& h,
                                       double tolerance, const OrderOptions& options) {
    auto estimate = [&](const EntireSeries& s) -> std::pair<double, std::optional<double>> {
        // Too short to have a tail: a finite section is a polynomial, order 0.
        if (s.truncation() < 8) return {0.0, {}};
        try {
            auto est = order_estimate(s, options);
            return {est.order, est.type};
        } catch (const AllZeroTail&) {
            return {0.0, {}};
        }
    };
    OrderComparison c;
    std::tie(c.order_f, c.type_f) = estimate(f);
    std::tie(c.order_q, c.type_q) = estimate(q);
    std::tie(c.order_h, c.type_h) = estimate(h);
    c.q_within = c.order_q <= c.order_f + tolerance;
    c.h_within = c.order_h <= c.order_f + tolerance;
    if (c.order_f > 0 && std::abs(c.order_q - c.order_f) <= tolerance && c.type_q && c.type_f) {
        c.q_type_within = *c.type_q <= *c.type_f + tolerance;
    }
    if (c.order_f > 0 && std::abs(c.order_h - c.order_f) <= tolerance && c.type_h && c.type_f) {
        c.h_type_within = *c.type_h <= *c.type_f + tolerance;
    }
    return c;
}

std::string tail_to_csv(const std::vector<TailRow>& tail) {
    std::ostringstream out;
    out << "M,norm_GM,bound_shape\n";
    for (const auto& r : tail) out << r.degree << ',' << format_double(r.norm) << ',' << format_double(r.bound_shape) << '\n';
    return out.str();
}

}  // namespace polyharm::entire
