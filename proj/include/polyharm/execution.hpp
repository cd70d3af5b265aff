#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace polyharm {

/// Selects between the OpenMP kernel and its serial reference. Both paths
/// must produce identical results; tests compare them.
enum class Execution { Serial, Parallel };

/// Calls body(i) for i in [0, n). In parallel mode, iterations are scheduled
/// dynamically; the first exception thrown by any iteration is rethrown after
/// the loop. Callers write results to per-index slots so output order is fixed.
template <class Body>
void for_each_index(std::size_t n, Execution execution, Body&& body) {
    if (execution == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace polyharm
