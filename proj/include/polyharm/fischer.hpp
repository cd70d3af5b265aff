#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "polyharm/exact_linalg.hpp"
#include "polyharm/polynomial.hpp"
#include "polyharm/random.hpp"

namespace polyharm {

/// P = leading - sum_j lower[j], with Delta^k as the annihilated operator.
/// Lower parts are stored with a positive sign and subtracted on assembly.
struct FischerProblem {
    int dimension = 0;
    int k = 1;
    HomogeneousPolynomial leading;                ///< degree 2k
    std::map<int, HomogeneousPolynomial> lower;  ///< degree j -> part of degree j < 2k

    /// Throws std::invalid_argument when the invariants fail.
    void validate() const;
    /// Highest degree carrying a nonzero lower part; -1 when there is none.
    [[nodiscard]] int beta() const;
    [[nodiscard]] Polynomial assemble() const;
    /// 2k - beta (2k when there are no lower parts).
    [[nodiscard]] int degree_drop() const;
};

/// Builds a problem from a full polynomial P: the top part becomes the
/// leading term, everything else is negated into `lower`.
FischerProblem problem_from_polynomial(const Polynomial& P, int k);

/// f - P q - h and Delta^k h, both expected to vanish.
struct DecompositionCertificate {
    Polynomial residual;
    Polynomial laplacian_remainder;

    [[nodiscard]] bool holds() const { return residual.is_zero() && laplacian_remainder.is_zero(); }
};

struct DecompositionResult {
    Polynomial quotient;
    Polynomial remainder;
    DecompositionCertificate certificate;

    [[nodiscard]] bool exact() const { return certificate.holds(); }
};

DecompositionCertificate certify(const FischerProblem& problem, const Polynomial& f, const Polynomial& q,
                                 const Polynomial& h);

/// The homogeneous Fischer operator q = T(f_m) for the leading term: the unique
/// q of degree m - 2k with Delta^k(P_2k q) = Delta^k f_m. Per-degree inverse
/// matrices are cached; the cache is safe to share between threads.
class FischerOperator {
public:
    explicit FischerOperator(FischerProblem problem);

    [[nodiscard]] const FischerProblem& problem() const { return problem_; }
    [[nodiscard]] int dimension() const { return problem_.dimension; }

    /// Zero when m < 2k. Throws SingularFischerOperator when the graded system
    /// at degree m is singular.
    [[nodiscard]] HomogeneousPolynomial apply(const HomogeneousPolynomial& f_m) const;

    /// Number of cached per-degree solvers (for tests).
    [[nodiscard]] std::size_t cached_degrees() const;

private:
    struct DegreeSolver {
        std::vector<MultiIndex> basis;  ///< monomials of degree m - 2k
        RationalMatrix inverse;         ///< realified when P_2k is complex
        bool realified = false;
    };
    std::shared_ptr<const DegreeSolver> solver_for(int m) const;

    FischerProblem problem_;
    HomogeneousPolynomial leading_real_;
    HomogeneousPolynomial leading_imag_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::shared_ptr<const DegreeSolver>> cache_;
};

/// Free-function form of T_{P_2k}.
HomogeneousPolynomial fischer_operator_homogeneous(const FischerProblem& problem, const HomogeneousPolynomial& f_m);

/// Descending degree sweep: at each degree peel q_m = T(f_m), keep
/// f_m - P_2k q_m as remainder, and push P_s q_m down to degree m - 2k + s.
DecompositionResult decompose_recursive(const FischerOperator& op, const Polynomial& f);
DecompositionResult decompose_recursive(const FischerProblem& problem, const Polynomial& f);

/// Leading terms used by the randomized checks.
enum class LeadingFamily { SecondCoordinateSquared, NormSquared, RandomPositiveDefinite };

/// k = 1 problem with the chosen leading quadratic and, when `with_lower`,
/// random parts of degrees 0 and 1.
FischerProblem random_fischer_problem(Rng& rng, int dimension, LeadingFamily family, bool with_lower);

/// Bookkeeping of the iterated-series evaluation.
struct SeriesTrace {
    std::size_t tuples_visited = 0;   ///< index tuples with a nonzero operand
    int max_layers = 0;               ///< largest tuple length j+1 seen
    int layer_bound = 0;              ///< floor(m / (2k - beta))
    std::size_t memo_hits = 0;
};

/// T_P(f_m) as the iterated sum over index tuples (s_0, ..., s_j) of
/// T P_{s_j} ... T P_{s_0} T f_m. Every operand's degree is checked against
/// m + sum(s_i - 2k) - 2k and every tuple length against the layer bound;
/// a failed check throws std::logic_error.
Polynomial decompose_series_formula(const FischerOperator& op, const HomogeneousPolynomial& f_m,
                                    SeriesTrace* trace = nullptr);
Polynomial decompose_series_formula(const FischerProblem& problem, const HomogeneousPolynomial& f_m,
                                    SeriesTrace* trace = nullptr);

/// Closed rational interval [lo, hi] containing an irrational constant.
struct RationalInterval {
    Rational lo;
    Rational hi;
};

enum class BoundVerdict { Holds, Violated, Indeterminate };

struct NormBoundRecord {
    int degree = 0;
    std::size_t samples = 0;
    std::size_t violations = 0;
    std::size_t indeterminate = 0;
    double worst_ratio = 0.0;  ///< max ||T f|| / ||f|| observed
    double allowed_ratio = 0.0;  ///< 1 / C, from the interval midpoint
};

/// Compares ||T f||^2 with ||f||^2 / C^2 as exact rationals for C in `constant`:
/// Holds if the inequality holds for C = constant.hi, Violated if it fails for
/// C = constant.lo, Indeterminate otherwise.
BoundVerdict check_norm_bound(const Rational& image_norm_sq, const Rational& input_norm_sq,
                              const RationalInterval& constant);

/// Checks ||T f_m|| <= ||f_m|| / C on the given samples. The problem must have
/// no lower parts. Throws BoundViolated on any violation when `throw_on_violation`.
NormBoundRecord operator_norm_bound(const FischerOperator& op, int m, const RationalInterval& constant,
                                    std::span<const HomogeneousPolynomial> samples, bool throw_on_violation = true);

/// Same with `count` seeded random samples of degree m.
NormBoundRecord operator_norm_bound(const FischerOperator& op, int m, const RationalInterval& constant,
                                    std::size_t count, Rng& rng, bool throw_on_violation = true);

}  // namespace polyharm
