#pragma once

#include <cstddef>
#include <span>

#include "polyharm/execution.hpp"
#include "polyharm/polynomial.hpp"

/// Data-parallel evaluation kernels. Each has an OpenMP implementation and a
/// serial reference; `Execution` picks one. Reductions are max-reductions, so
/// both paths return bit-identical results.
namespace polyharm::kernels {

/// max_i |f(p_i)| over points stored row-major (count x dimension).
double max_abs(const CompiledPolynomial& f, std::span<const double> points, Execution execution);

/// max_i |f(p_i) - g(p_i)|.
double max_abs_difference(const CompiledPolynomial& f, const CompiledPolynomial& g, std::span<const double> points,
                          Execution execution);

/// Counts n in [n_min, n_max] with sin(pi/n) < pi/(n+2) + slack(n) in extended
/// precision, where slack covers rounding. Returns the number of violations and
/// the smallest relative margin seen.
struct SineScan {
    long long violations = 0;
    long double min_relative_margin = 0;
    long long checked = 0;
};
SineScan sine_bound_scan(long long n_min, long long n_max, Execution execution);

}  // namespace polyharm::kernels
