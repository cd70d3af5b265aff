#include "polyharm/kernels.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyharm::kernels {

namespace {

std::size_t point_count(std::span<const double> points, int dimension) {
    if (dimension <= 0 || points.size() % static_cast<std::size_t>(dimension) != 0) {
        throw std::invalid_argument("point buffer is not a multiple of the dimension");
    }
    return points.size() / static_cast<std::size_t>(dimension);
}

std::span<const double> point(std::span<const double> points, int dimension, std::size_t i) {
    return points.subspan(i * static_cast<std::size_t>(dimension), static_cast<std::size_t>(dimension));
}

// |sin(pi/n) - pi/(n+2)| relative to pi/(n+2); negative means violation.
long double sine_margin(long long n) {
    const long double pi = std::numbers::pi_v<long double>;
    const long double nn = static_cast<long double>(n);
    const long double lhs = std::sin(pi / nn);
    const long double rhs = pi / (nn + 2);
    return (lhs - rhs) / rhs;
}

// Rounding slack for the long double comparison: a few ulps of each side.
constexpr long double kSineSlack = 64 * LDBL_EPSILON;

}  // namespace

double max_abs(const CompiledPolynomial& f, std::span<const double> points, Execution execution) {
    const int d = f.dimension();
    const std::size_t n = point_count(points, d);
    double best = 0.0;
    if (execution == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::abs(f(point(points, d, i))));
        return best;
    }
#pragma omp parallel for reduction(max : best) schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        best = std::max(best, std::abs(f(point(points, d, static_cast<std::size_t>(i)))));
    }
    return best;
}

double max_abs_difference(const CompiledPolynomial& f, const CompiledPolynomial& g, std::span<const double> points,
                          Execution execution) {
    if (f.dimension() != g.dimension()) throw std::invalid_argument("dimension mismatch");
    const int d = f.dimension();
    const std::size_t n = point_count(points, d);
    double best = 0.0;
    if (execution == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) {
            auto p = point(points, d, i);
            best = std::max(best, std::abs(f(p) - g(p)));
        }
        return best;
    }
#pragma omp parallel for reduction(max : best) schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        auto p = point(points, d, static_cast<std::size_t>(i));
        best = std::max(best, std::abs(f(p) - g(p)));
    }
    return best;
}

SineScan sine_bound_scan(long long n_min, long long n_max, Execution execution) {
    if (n_min < 2) throw std::invalid_argument("sine bound starts at n = 2");
    SineScan scan;
    if (n_max < n_min) return scan;
    long long violations = 0;
    long double min_margin = sine_margin(n_min);
    if (execution == Execution::Serial) {
        for (long long n = n_min; n <= n_max; ++n) {
            long double m = sine_margin(n);
            if (m <= kSineSlack) ++violations;
            min_margin = std::min(min_margin, m);
        }
    } else {
#pragma omp parallel for reduction(+ : violations) reduction(min : min_margin) schedule(static)
        for (long long n = n_min; n <= n_max; ++n) {
            long double m = sine_margin(n);
            if (m <= kSineSlack) ++violations;
            min_margin = std::min(min_margin, m);
        }
    }
    scan.violations = violations;
    scan.min_relative_margin = min_margin;
    scan.checked = n_max - n_min + 1;
    return scan;
}

}  // namespace polyharm::kernels
