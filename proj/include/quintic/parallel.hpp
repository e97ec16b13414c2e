#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace quintic {

/// Calls fn(i) for i in [0, n) on up to `workers` threads. Callers write
/// into preallocated slots, so results keep index order.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn)
{
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers && w < n; ++w) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace quintic
