#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mfr {

// Runs f(k) for k in [0, n). Work is handed out in small blocks, so results
// must only depend on k, never on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
    if (threads <= 1 || n < 2) {
        for (std::size_t k = 0; k < n; ++k) f(k);
        return;
    }
    threads = unsigned(std::min<std::size_t>(threads, n));
    constexpr std::size_t block = 16;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        try {
            for (;;) {
                std::size_t lo = next.fetch_add(block);
                if (lo >= n) return;
                for (std::size_t k = lo; k < std::min(n, lo + block); ++k) f(k);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = n;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace mfr
