#pragma once

#include <cstdint>
#include <exception>
#include <mutex>

namespace collective::detail {

// Runs body(i) for i in [0, count) on the OpenMP team (OMP_NUM_THREADS).
// The first exception thrown by any iteration is rethrown on the caller.
template <typename Body>
void parallel_for(std::int64_t count, Body &&body) {
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace collective::detail
