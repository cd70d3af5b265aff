#include "polyharm/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polyharm/format.hpp"
#include "polyharm/kernels.hpp"
#include "polyharm/sphere.hpp"

namespace polyharm::dirichlet {

namespace {

HomogeneousPolynomial square_over(int d, int i, const Rational& axis) {
    auto x = HomogeneousPolynomial::variable(d, i);
    return x * x * ComplexRational(1 / (axis * axis));
}

Rational max_square(const std::vector<Rational>& axes) {
    Rational best = 0;
    for (const auto& a : axes) best = std::max(best, Rational(a * a));
    return best;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

}  // namespace

DomainSpec DomainSpec::ellipsoid(std::vector<Rational> axes) {
    DomainSpec s;
    s.kind = DomainKind::Ellipsoid;
    s.dimension = static_cast<int>(axes.size());
    s.axes = std::move(axes);
    s.validate();
    return s;
}

DomainSpec DomainSpec::parabola(Rational a) {
    DomainSpec s;
    s.kind = DomainKind::Parabola;
    s.a = std::move(a);
    s.validate();
    return s;
}

DomainSpec DomainSpec::strip(Rational a) {
    DomainSpec s;
    s.kind = DomainKind::Strip;
    s.a = std::move(a);
    s.validate();
    return s;
}

DomainSpec DomainSpec::cylinder(std::vector<Rational> axes, int dimension) {
    DomainSpec s;
    s.kind = DomainKind::Cylinder;
    s.dimension = dimension;
    s.axes = std::move(axes);
    s.validate();
    return s;
}

void DomainSpec::validate() const {
    switch (kind) {
        case DomainKind::Ellipsoid:
            if (dimension < 2 || static_cast<int>(axes.size()) != dimension) {
                throw std::invalid_argument("ellipsoid needs one semi-axis per dimension, d >= 2");
            }
            break;
        case DomainKind::Cylinder:
            if (dimension < 3 || static_cast<int>(axes.size()) != dimension - 1) {
                throw std::invalid_argument("cylinder needs d >= 3 and d - 1 semi-axes");
            }
            break;
        case DomainKind::Parabola:
        case DomainKind::Strip:
            if (dimension != 2) throw std::invalid_argument(kind_name(kind) + " lives in dimension 2");
            if (sgn(a) <= 0) throw std::invalid_argument(kind_name(kind) + " parameter must be positive");
            return;
    }
    if (dimension > kMaxDimension) throw std::invalid_argument("dimension too large");
    for (const auto& ax : axes)
        if (sgn(ax) <= 0) throw std::invalid_argument("semi-axes must be positive");
}

std::string kind_name(DomainKind kind) {
    switch (kind) {
        case DomainKind::Ellipsoid: return "ellipsoid";
        case DomainKind::Parabola: return "parabola";
        case DomainKind::Strip: return "strip";
        case DomainKind::Cylinder: return "cylinder";
    }
    return "?";
}

DomainKind parse_kind(const std::string& name) {
    if (name == "ellipsoid") return DomainKind::Ellipsoid;
    if (name == "parabola") return DomainKind::Parabola;
    if (name == "strip") return DomainKind::Strip;
    if (name == "cylinder") return DomainKind::Cylinder;
    throw std::invalid_argument("unknown domain kind '" + name + "'");
}

DomainInstance to_fischer_problem(const DomainSpec& spec) {
    spec.validate();
    DomainInstance inst;
    auto& p = inst.problem;
    p.dimension = spec.dimension;
    p.k = 1;
    const int d = spec.dimension;
    const double four_over_pi_sq = 4.0 / (std::numbers::pi * std::numbers::pi);
    switch (spec.kind) {
        case DomainKind::Ellipsoid: {
            p.leading = HomogeneousPolynomial(d, 2);
            for (int i = 0; i < d; ++i) p.leading += square_over(d, i, spec.axes[static_cast<std::size_t>(i)]);
            p.lower[0] = HomogeneousPolynomial::constant(d, ComplexRational(1));
            // The leading form is at least |x|^2 / max a_i^2 on the sphere.
            inst.constants = {max_square(spec.axes).get_d(), 1.0, 0.0};
            break;
        }
        case DomainKind::Parabola: {
            auto x2 = HomogeneousPolynomial::variable(2, 1);
            p.leading = x2 * x2;
            p.lower[1] = HomogeneousPolynomial::variable(2, 0) * ComplexRational(spec.a);
            inst.constants = {four_over_pi_sq, 4.0, 2.0};
            break;
        }
        case DomainKind::Strip: {
            auto x1 = HomogeneousPolynomial::variable(2, 0);
            p.leading = x1 * x1;
            p.lower[0] = HomogeneousPolynomial::constant(2, ComplexRational(spec.a * spec.a));
            inst.constants = {four_over_pi_sq, 4.0, 2.0};
            break;
        }
        case DomainKind::Cylinder: {
            p.leading = HomogeneousPolynomial(d, 2);
            for (int i = 0; i + 1 < d; ++i) p.leading += square_over(d, i, spec.axes[static_cast<std::size_t>(i)]);
            p.lower[0] = HomogeneousPolynomial::constant(d, ComplexRational(1));
            // Assumed by analogy with the strip; no growth constant is derived for cylinders.
            inst.constants = {four_over_pi_sq * max_square(spec.axes).get_d(), 4.0, 2.0};
            break;
        }
    }
    p.validate();
    inst.gate = entire::order_gate(p, inst.constants);
    return inst;
}

BoundarySamples boundary_samples(const DomainSpec& spec, const BoundaryWindow& window) {
    spec.validate();
    BoundarySamples out;
    const int d = spec.dimension;
    const std::size_t n = window.samples;
    auto push = [&](double param, std::initializer_list<double> pt) {
        out.parameters.push_back(param);
        out.points.insert(out.points.end(), pt);
    };
    switch (spec.kind) {
        case DomainKind::Ellipsoid: {
            if (d == 2) {
                const double a1 = spec.axes[0].get_d();
                const double a2 = spec.axes[1].get_d();
                for (std::size_t i = 0; i < n; ++i) {
                    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
                    push(t, {a1 * std::cos(t), a2 * std::sin(t)});
                }
                out.description = "angle t in [0, 2pi), (a1 cos t, a2 sin t)";
            } else {
                sphere::SamplingOptions opts;
                opts.sphere_samples = n;
                auto pts = sphere::sphere_sample_points(d, opts);
                for (std::size_t i = 0; i < pts.size(); ++i) pts[i] *= spec.axes[i % static_cast<std::size_t>(d)].get_d();
                out.points = std::move(pts);
                for (std::size_t i = 0; i < out.points.size() / static_cast<std::size_t>(d); ++i) out.parameters.push_back(static_cast<double>(i));
                out.description = "scaled quasi-random sphere points";
            }
            break;
        }
        case DomainKind::Parabola: {
            const double a = spec.a.get_d();
            for (double t : linspace(window.t_min, window.t_max, n)) push(t, {t * t / a, t});
            out.description = "(t^2/a, t), t in [" + format_double(window.t_min) + ", " + format_double(window.t_max) + "]";
            break;
        }
        case DomainKind::Strip: {
            const double a = spec.a.get_d();
            const std::size_t half = std::max<std::size_t>(n / 2, 1);
            for (double t : linspace(window.t_min, window.t_max, half)) push(t, {-a, t});
            for (double t : linspace(window.t_min, window.t_max, half)) push(t, {a, t});
            out.description = "x1 = -a and x1 = a, x2 in [" + format_double(window.t_min) + ", " +
                              format_double(window.t_max) + "]";
            break;
        }
        case DomainKind::Cylinder: {
            // Ellipse of the first d-1 axes (d = 3) times axial samples in the window.
            if (d != 3) throw std::invalid_argument("cylinder boundary sampling is implemented for d = 3");
            const std::size_t angles = 64;
            const std::size_t axial = std::max<std::size_t>(n / angles, 1);
            const double a1 = spec.axes[0].get_d();
            const double a2 = spec.axes[1].get_d();
            for (double z : linspace(window.t_min, window.t_max, axial)) {
                for (std::size_t i = 0; i < angles; ++i) {
                    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(angles);
                    push(t, {a1 * std::cos(t), a2 * std::sin(t), z});
                }
            }
            out.description = "(a1 cos t, a2 sin t, z), z in [" + format_double(window.t_min) + ", " +
                              format_double(window.t_max) + "]";
            break;
        }
    }
    return out;
}

BoundaryResidualReport boundary_residual(const DomainSpec& spec, const Polynomial& f, const Polynomial& h, int truncation,
                                         const BoundaryWindow& window, Execution execution) {
    const auto samples = boundary_samples(spec, window);
    BoundaryResidualReport report;
    report.parameterization = samples.description;
    report.samples = samples.parameters.size();
    report.truncation = truncation;
    const CompiledPolynomial ch(h);
    report.max_residual = kernels::max_abs_difference(CompiledPolynomial(f), ch, samples.points, execution);
    report.max_magnitude = kernels::max_abs(ch, samples.points, execution);
    return report;
}

std::string boundary_csv(const DomainSpec& spec, const Polynomial& f, const Polynomial& h, const BoundaryWindow& window) {
    const auto samples = boundary_samples(spec, window);
    const CompiledPolynomial cf(f);
    const CompiledPolynomial ch(h);
    const auto d = static_cast<std::size_t>(spec.dimension);
    std::ostringstream out;
    out << "parameter,f,h,abs_diff\n";
    for (std::size_t i = 0; i < samples.parameters.size(); ++i) {
        std::span<const double> p(samples.points.data() + i * d, d);
        const auto fv = cf(p);
        const auto hv = ch(p);
        out << format_double(samples.parameters[i]) << ',' << format_double(fv.real()) << ','
            << format_double(hv.real()) << ',' << format_double(std::abs(fv - hv)) << '\n';
    }
    return out.str();
}

DirichletSolution solve(const DomainSpec& spec, const entire::EntireSeries& data, const SolveOptions& options) {
    DirichletSolution sol;
    sol.instance = to_fischer_problem(spec);
    entire::DecomposeOptions dopts;
    dopts.constants = sol.instance.constants;
    dopts.execution = options.execution;
    dopts.estimate_order = options.estimate_order;
    sol.decomposition = entire::decompose_entire(sol.instance.problem, data, dopts);
    sol.residual = boundary_residual(spec, data.truncated(), sol.decomposition.remainder.truncated(), data.truncation(),
                                     options.window, options.execution);
    return sol;
}

DirichletSolution solve(const DomainSpec& spec, const Polynomial& data, const SolveOptions& options) {
    return solve(spec, entire::EntireSeries::from_polynomial(data, std::max(data.degree(), 0)), options);
}

Rational pi_approximation() {
    static const Rational pi(Integer("314159265358979323846"), Integer("100000000000000000000"));
    return pi;
}

NonuniquenessWitness nonuniqueness_witness(const DomainSpec& strip, int truncation) {
    return nonuniqueness_witness(strip, truncation, pi_approximation() / strip.a);
}

NonuniquenessWitness nonuniqueness_witness(const DomainSpec& strip, int truncation, const Rational& c) {
    if (strip.kind != DomainKind::Strip) throw std::invalid_argument("the witness is built for the strip");
    const auto inst = to_fischer_problem(strip);
    const auto data = entire::sin_exp_series(truncation, c);
    const Polynomial f = data.truncated();

    NonuniquenessWitness w;
    w.truncation = truncation;
    w.c = c;
    w.data_harmonic = true;
    for (const auto& part : data.parts()) w.data_harmonic = w.data_harmonic && part.laplacian().is_zero();

    w.pipeline = decompose_recursive(inst.problem, f);
    w.pipeline_exact = w.pipeline.exact();

    // 1 / (x1^2 - a^2) = -(1/a^2) sum_j (x1^2 / a^2)^j as a formal power series.
    const Rational a2 = strip.a * strip.a;
    const auto x1 = HomogeneousPolynomial::variable(2, 0);
    Polynomial inverse(2);
    for (int j = 0; 2 * j <= truncation; ++j) {
        Rational coeff = -1 / a2;
        for (int i = 0; i < j; ++i) coeff /= a2;
        inverse.add(x1.power(2 * j) * ComplexRational(coeff));
    }
    Polynomial q(2);
    const Polynomial product = f * inverse;
    for (const auto& [m, part] : product.parts())
        if (m <= truncation) q.add(part);
    w.formal.quotient = q;
    w.formal.remainder = Polynomial(2);
    w.formal.certificate = certify(inst.problem, f, w.formal.quotient, w.formal.remainder);
    w.formal_exact_through_truncation = w.formal.certificate.laplacian_remainder.is_zero();
    for (const auto& [m, part] : w.formal.certificate.residual.parts())
        if (m <= truncation) w.formal_exact_through_truncation = false;

    w.differ = !(w.pipeline.quotient == w.formal.quotient) || !(w.pipeline.remainder == w.formal.remainder);
    return w;
}

}  // namespace polyharm::dirichlet
