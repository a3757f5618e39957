#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qforms {

inline unsigned effective_jobs(unsigned jobs, std::size_t items) {
    if (jobs == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : hw;
    }
    if (items < jobs) jobs = static_cast<unsigned>(items);
    return jobs == 0 ? 1 : jobs;
}

// Runs fn(0), ..., fn(n-1) on a bounded worker pool and blocks until all
// items finish. fn must not throw; callers wrap their work.
inline void parallel_for_indexed(std::size_t n, unsigned jobs,
                                 const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    jobs = effective_jobs(jobs, n);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace qforms
