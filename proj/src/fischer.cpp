#include "polyharm/fischer.hpp"

#include <cmath>
#include <stdexcept>

#include "polyharm/errors.hpp"
#include "polyharm/sphere.hpp"

namespace polyharm {

void FischerProblem::validate() const {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (leading.dimension() != dimension) throw DimensionMismatch(leading.dimension(), dimension);
    if (leading.is_zero() || leading.degree() != 2 * k) {
        throw std::invalid_argument("leading term must be a nonzero homogeneous polynomial of degree 2k");
    }
    for (const auto& [j, part] : lower) {
        if (part.is_zero()) continue;
        if (part.dimension() != dimension) throw DimensionMismatch(part.dimension(), dimension);
        if (j < 0 || j >= 2 * k || part.degree() != j) {
            throw std::invalid_argument("lower part of degree " + std::to_string(j) + " must have degree below 2k");
        }
    }
}

int FischerProblem::beta() const {
    int b = -1;
    for (const auto& [j, part] : lower)
        if (!part.is_zero()) b = std::max(b, j);
    return b;
}

int FischerProblem::degree_drop() const { return beta() < 0 ? 2 * k : 2 * k - beta(); }

Polynomial FischerProblem::assemble() const {
    Polynomial P(leading);
    for (const auto& [j, part] : lower) P.subtract(part);
    return P;
}

FischerProblem problem_from_polynomial(const Polynomial& P, int k) {
    FischerProblem problem;
    problem.dimension = P.dimension();
    problem.k = k;
    problem.leading = P.part(2 * k);
    for (const auto& [m, part] : P.parts()) {
        if (m > 2 * k) throw std::invalid_argument("P has degree above 2k");
        if (m < 2 * k) problem.lower[m] = -part;
    }
    problem.validate();
    return problem;
}

DecompositionCertificate certify(const FischerProblem& problem, const Polynomial& f, const Polynomial& q,
                                 const Polynomial& h) {
    DecompositionCertificate cert;
    cert.residual = f - problem.assemble() * q - h;
    cert.laplacian_remainder = laplacian_power(h, problem.k, problem.dimension);
    return cert;
}

// ------------------------------------------------------------------ operator

FischerOperator::FischerOperator(FischerProblem problem) : problem_(std::move(problem)) {
    problem_.validate();
    leading_real_ = HomogeneousPolynomial(problem_.dimension, problem_.leading.degree());
    leading_imag_ = HomogeneousPolynomial(problem_.dimension, problem_.leading.degree());
    for (const auto& [alpha, c] : problem_.leading.terms()) {
        if (sgn(c.re) != 0) leading_real_.add_term(alpha, ComplexRational(c.re));
        if (sgn(c.im) != 0) leading_imag_.add_term(alpha, ComplexRational(c.im));
    }
}

std::size_t FischerOperator::cached_degrees() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

std::shared_ptr<const FischerOperator::DegreeSolver> FischerOperator::solver_for(int m) const {
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
    }
    // Built outside the lock; two threads racing on the same degree compute
    // the same matrix, and the first insert wins.
    const int d = problem_.dimension;
    const int k = problem_.k;
    const int n = m - 2 * k;
    auto solver = std::make_shared<DegreeSolver>();
    solver->basis = monomials_of_degree(d, n);
    const std::size_t N = solver->basis.size();

    auto column = [&](const HomogeneousPolynomial& P, std::size_t j) {
        return laplacian_power(P * HomogeneousPolynomial::monomial(solver->basis[j]), k);
    };
    RationalMatrix Sr(N, N);
    for (std::size_t j = 0; j < N; ++j) {
        auto col = column(leading_real_, j);
        for (std::size_t i = 0; i < N; ++i) Sr(i, j) = col.coefficient(solver->basis[i]).re;
    }
    std::optional<RationalMatrix> inverse;
    if (leading_imag_.is_zero()) {
        inverse = bareiss_solve(Sr, RationalMatrix::identity(N));
    } else {
        RationalMatrix Si(N, N);
        for (std::size_t j = 0; j < N; ++j) {
            auto col = column(leading_imag_, j);
            for (std::size_t i = 0; i < N; ++i) Si(i, j) = col.coefficient(solver->basis[i]).re;
        }
        RationalMatrix S(2 * N, 2 * N);
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                S(i, j) = Sr(i, j);
                S(i, j + N) = -Si(i, j);
                S(i + N, j) = Si(i, j);
                S(i + N, j + N) = Sr(i, j);
            }
        }
        inverse = bareiss_solve(S, RationalMatrix::identity(2 * N));
        solver->realified = true;
    }
    if (!inverse) throw SingularFischerOperator(m);
    solver->inverse = std::move(*inverse);

    std::lock_guard lock(mutex_);
    auto [it, inserted] = cache_.emplace(m, std::move(solver));
    return it->second;
}

HomogeneousPolynomial FischerOperator::apply(const HomogeneousPolynomial& f_m) const {
    const int d = problem_.dimension;
    if (f_m.dimension() != d) throw DimensionMismatch(f_m.dimension(), d);
    const int m = f_m.degree();
    const int n = m - 2 * problem_.k;
    if (n < 0) return HomogeneousPolynomial(d, 0);
    if (f_m.is_zero()) return HomogeneousPolynomial(d, n);

    auto solver = solver_for(m);
    const auto rhs = laplacian_power(f_m, problem_.k);
    const std::size_t N = solver->basis.size();
    std::vector<ComplexRational> b(N);
    for (std::size_t i = 0; i < N; ++i) b[i] = rhs.coefficient(solver->basis[i]);

    HomogeneousPolynomial q(d, n);
    const auto& X = solver->inverse;
    for (std::size_t i = 0; i < N; ++i) {
        ComplexRational c;
        if (!solver->realified) {
            for (std::size_t j = 0; j < N; ++j) {
                if (sgn(X(i, j)) == 0 || b[j].is_zero()) continue;
                c.re += X(i, j) * b[j].re;
                c.im += X(i, j) * b[j].im;
            }
        } else {
            for (std::size_t j = 0; j < N; ++j) {
                c.re += X(i, j) * b[j].re + X(i, j + N) * b[j].im;
                c.im += X(i + N, j) * b[j].re + X(i + N, j + N) * b[j].im;
            }
        }
        if (!c.is_zero()) q.add_term(solver->basis[i], c);
    }
    return q;
}

FischerProblem random_fischer_problem(Rng& rng, int dimension, LeadingFamily family, bool with_lower) {
    FischerProblem p;
    p.dimension = dimension;
    p.k = 1;
    switch (family) {
        case LeadingFamily::SecondCoordinateSquared: p.leading = HomogeneousPolynomial::variable(dimension, 1).power(2); break;
        case LeadingFamily::NormSquared: p.leading = HomogeneousPolynomial::norm_squared(dimension); break;
        case LeadingFamily::RandomPositiveDefinite: p.leading = random_positive_quadratic(rng, dimension); break;
    }
    if (with_lower) {
        for (int j = 0; j < 2; ++j) {
            auto part = random_homogeneous(rng, dimension, j);
            if (!part.is_zero()) p.lower[j] = part;
        }
    }
    p.validate();
    return p;
}

HomogeneousPolynomial fischer_operator_homogeneous(const FischerProblem& problem, const HomogeneousPolynomial& f_m) {
    return FischerOperator(problem).apply(f_m);
}

// ------------------------------------------------------------ decompositions

DecompositionResult decompose_recursive(const FischerOperator& op, const Polynomial& f) {
    const auto& problem = op.problem();
    const int d = problem.dimension;
    if (f.dimension() != d) throw DimensionMismatch(f.dimension(), d);
    const int two_k = 2 * problem.k;

    std::map<int, HomogeneousPolynomial> pending = f.parts();
    Polynomial q(d);
    Polynomial h(d);
    while (!pending.empty()) {
        auto top = std::prev(pending.end());
        const int m = top->first;
        HomogeneousPolynomial f_m = std::move(top->second);
        pending.erase(top);
        if (f_m.is_zero()) continue;

        auto t = op.apply(f_m);
        if (t.is_zero()) {
            h.add(f_m);
            continue;
        }
        q.add(t);
        h.add(f_m - problem.leading * t);
        for (const auto& [s, P_s] : problem.lower) {
            if (P_s.is_zero()) continue;
            auto pushed = P_s * t;
            const int target = m - two_k + s;
            auto [it, inserted] = pending.try_emplace(target, HomogeneousPolynomial(d, target));
            it->second += pushed;
        }
    }
    DecompositionResult result;
    result.quotient = std::move(q);
    result.remainder = std::move(h);
    result.certificate = certify(problem, f, result.quotient, result.remainder);
    return result;
}

DecompositionResult decompose_recursive(const FischerProblem& problem, const Polynomial& f) {
    return decompose_recursive(FischerOperator(problem), f);
}

namespace {

struct SeriesWalker {
    const FischerOperator& op;
    int m;
    int two_k;
    int layer_bound;
    Polynomial sum;
    SeriesTrace trace;
    std::map<std::string, HomogeneousPolynomial> memo;

    HomogeneousPolynomial apply_memo(const HomogeneousPolynomial& operand) {
        auto key = std::to_string(operand.degree()) + ":" + to_string(operand);
        auto it = memo.find(key);
        if (it != memo.end()) {
            ++trace.memo_hits;
            return it->second;
        }
        auto value = op.apply(operand);
        memo.emplace(std::move(key), value);
        return value;
    }

    // `node` is T P_{s_j} ... T P_{s_0} T f_m for a tuple of length `layers`
    // whose entries sum to `s_sum`.
    void visit(const HomogeneousPolynomial& node, int layers, int s_sum) {
        if (node.is_zero()) return;
        const int expected = m + s_sum - two_k * (layers + 1);
        if (node.degree() != expected) {
            throw std::logic_error("series operand has degree " + std::to_string(node.degree()) + ", expected " +
                                   std::to_string(expected));
        }
        if (layers > layer_bound) {
            throw std::logic_error("series tuple of length " + std::to_string(layers) + " exceeds layer bound " +
                                   std::to_string(layer_bound));
        }
        ++trace.tuples_visited;
        trace.max_layers = std::max(trace.max_layers, layers);
        sum.add(node);
        for (const auto& [s, P_s] : op.problem().lower) {
            if (P_s.is_zero()) continue;
            // Degree of P_s * node is expected + s; T drops another 2k.
            if (expected + s - two_k < 0) continue;
            visit(apply_memo(P_s * node), layers + 1, s_sum + s);
        }
    }
};

}  // namespace

Polynomial decompose_series_formula(const FischerOperator& op, const HomogeneousPolynomial& f_m, SeriesTrace* trace) {
    const auto& problem = op.problem();
    if (f_m.dimension() != problem.dimension) throw DimensionMismatch(f_m.dimension(), problem.dimension);
    SeriesWalker walker{op, f_m.degree(), 2 * problem.k, f_m.degree() / problem.degree_drop(),
                        Polynomial(problem.dimension), {}, {}};
    walker.trace.layer_bound = walker.layer_bound;
    if (f_m.degree() >= 2 * problem.k) walker.visit(op.apply(f_m), 0, 0);
    if (trace) *trace = walker.trace;
    return walker.sum;
}

Polynomial decompose_series_formula(const FischerProblem& problem, const HomogeneousPolynomial& f_m,
                                    SeriesTrace* trace) {
    return decompose_series_formula(FischerOperator(problem), f_m, trace);
}

// ---------------------------------------------------------------- norm bound

BoundVerdict check_norm_bound(const Rational& image_norm_sq, const Rational& input_norm_sq,
                              const RationalInterval& constant) {
    if (image_norm_sq * constant.hi * constant.hi <= input_norm_sq) return BoundVerdict::Holds;
    if (image_norm_sq * constant.lo * constant.lo > input_norm_sq) return BoundVerdict::Violated;
    return BoundVerdict::Indeterminate;
}

NormBoundRecord operator_norm_bound(const FischerOperator& op, int m, const RationalInterval& constant,
                                    std::span<const HomogeneousPolynomial> samples, bool throw_on_violation) {
    if (op.problem().beta() >= 0) throw std::invalid_argument("norm bound applies to the leading term alone");
    if (sgn(constant.lo) <= 0 || constant.lo > constant.hi) throw std::invalid_argument("bad constant interval");
    NormBoundRecord record;
    record.degree = m;
    record.allowed_ratio = 1.0 / Rational((constant.lo + constant.hi) / 2).get_d();
    for (const auto& f : samples) {
        if (f.degree() != m) throw std::invalid_argument("sample has the wrong degree");
        if (f.is_zero()) continue;
        const Rational in = sphere::norm_squared_ratio(Polynomial(f));
        const Rational out = sphere::norm_squared_ratio(Polynomial(op.apply(f)));
        ++record.samples;
        record.worst_ratio = std::max(record.worst_ratio, std::sqrt(Rational(out / in).get_d()));
        switch (check_norm_bound(out, in, constant)) {
            case BoundVerdict::Holds: break;
            case BoundVerdict::Violated: ++record.violations; break;
            case BoundVerdict::Indeterminate: ++record.indeterminate; break;
        }
    }
    if (throw_on_violation && record.violations > 0) {
        throw BoundViolated(m, std::to_string(record.violations) + " samples exceed ||f|| / C");
    }
    return record;
}

NormBoundRecord operator_norm_bound(const FischerOperator& op, int m, const RationalInterval& constant,
                                    std::size_t count, Rng& rng, bool throw_on_violation) {
    std::vector<HomogeneousPolynomial> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        samples.push_back(random_nonzero_homogeneous(rng, op.dimension(), m));
    return operator_norm_bound(op, m, constant, samples, throw_on_violation);
}

}  // namespace polyharm
