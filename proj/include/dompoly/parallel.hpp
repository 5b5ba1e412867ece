#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace dompoly {

/// Worker count used when a caller passes 0: DOMPOLY_THREADS if set and
/// positive, else the hardware concurrency.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("DOMPOLY_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls body(worker, begin, end) over a contiguous split of [0, total)
/// into at most `threads` ranges. The first exception thrown by any worker
/// is rethrown after all workers join.
inline void parallel_ranges(std::size_t total, unsigned threads,
                            const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1)));
    if (threads == 1) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    const std::size_t step = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        std::size_t begin = std::min(total, w * step);
        std::size_t end = std::min(total, begin + step);
        pool.emplace_back([&, w, begin, end] {
            try {
                body(w, begin, end);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace dompoly
