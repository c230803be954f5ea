#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace cylosc::detail {

// Runs body(i) for i in [0, count) across OpenMP threads. Each index must
// write only its own output slot. The first exception thrown by any index is
// rethrown on the calling thread once the loop finishes.
template <class Body>
void parallel_for(std::size_t count, Body&& body)
{
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

}  // namespace cylosc::detail
