#include <doctest.h>

#include "polyharm/kernels.hpp"
#include "polyharm/random.hpp"
#include "polyharm/sphere.hpp"
#include "polyharm/spectral.hpp"

using namespace polyharm;

TEST_CASE("max_abs kernels agree") {
    Rng rng(61);
    for (int d = 2; d <= 4; ++d) {
        const CompiledPolynomial f(random_polynomial(rng, d, 7));
        const CompiledPolynomial g(random_polynomial(rng, d, 7));
        const auto points = sphere::sphere_sample_points(d, {1024, 4096, 7});
        CHECK(kernels::max_abs(f, points, Execution::Serial) == kernels::max_abs(f, points, Execution::Parallel));
        CHECK(kernels::max_abs_difference(f, g, points, Execution::Serial) ==
              kernels::max_abs_difference(f, g, points, Execution::Parallel));
    }
}

TEST_CASE("sine scan kernels agree") {
    const auto s = kernels::sine_bound_scan(2, 200000, Execution::Serial);
    const auto p = kernels::sine_bound_scan(2, 200000, Execution::Parallel);
    CHECK(s.violations == p.violations);
    CHECK(s.checked == p.checked);
    CHECK(s.min_relative_margin == p.min_relative_margin);
}

TEST_CASE("spectral scans agree") {
    const auto s = spectral::verify_main_inequality(60, Execution::Serial);
    const auto p = spectral::verify_main_inequality(60, Execution::Parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i].min_eigenvalue == p[i].min_eigenvalue);
}

TEST_CASE("sup norm estimates agree") {
    Rng rng(62);
    const auto f = random_nonzero_homogeneous(rng, 3, 6);
    const auto a = sphere::sup_norm_estimate(f, {}, Execution::Serial);
    const auto b = sphere::sup_norm_estimate(f, {}, Execution::Parallel);
    CHECK(a.sampled == b.sampled);
}
