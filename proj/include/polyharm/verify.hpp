#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyharm/execution.hpp"
#include "polyharm/random.hpp"

/// The invariant suite behind `polyharm verify`: one row per checked property,
/// covering every module from polynomial algebra through Dirichlet solves.
namespace polyharm::verify {

struct CheckResult {
    std::string label;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    Execution execution = Execution::Parallel;
    int spectral_m_max = 200;
    int random_decompositions = 500;
    int series_instances = 100;
    int norm_bound_samples = 100;
    long long sine_n_max = 1000000;
};

/// Runs every check; a check that throws is recorded as failed with the message.
std::vector<CheckResult> run_suite(const VerifyOptions& options = {});

/// Fixed-width PASS/FAIL table, one line per check.
std::string format_table(const std::vector<CheckResult>& results);

}  // namespace polyharm::verify
