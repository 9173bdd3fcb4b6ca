#pragma once

// Minimal fork-join helper. Work items are claimed dynamically, but every
// caller writes its result into a slot owned by the item index, so output
// never depends on scheduling or on the thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quatdesign {

namespace detail {
inline std::atomic<unsigned>& thread_limit() {
    static std::atomic<unsigned> limit{0};
    return limit;
}
inline bool& inside_worker() {
    thread_local bool flag = false;
    return flag;
}
}  // namespace detail

/// 0 restores the default (hardware concurrency).
inline void set_thread_count(unsigned n) { detail::thread_limit() = n; }

inline unsigned thread_count() {
    unsigned n = detail::thread_limit();
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

/// Calls fn(i) for i in [0, n). Rethrows the exception of the lowest failing index.
/// Nested calls from inside a worker run serially.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (workers <= 1 || detail::inside_worker()) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = n;
    std::exception_ptr failure;
    auto body = [&] {
        const bool outer = detail::inside_worker();
        detail::inside_worker() = true;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
        detail::inside_worker() = outer;
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace quatdesign
