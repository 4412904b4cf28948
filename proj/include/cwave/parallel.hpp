#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace cwave {

// Process-wide worker cap (the CLI --threads flag). Results never depend on
// it: parallel loops write disjoint slots indexed by iteration.
int worker_cap();
void set_worker_cap(int n);

// Runs body(i) for i in [0, n). Iterations must be independent.
template <typename Body>
void parallel_for(std::size_t n, const Body& body) {
    const int workers = std::min<std::size_t>(worker_cap(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < n; i += workers) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cwave
