// include/latgaps/parallel.hpp — tiny deterministic task runner.
//
// Work is split into a fixed list of indexed tasks whose boundaries do not
// depend on the worker count; workers only pick tasks from a shared counter.
// Callers merge per-task results in index order, so any worker count yields
// the same output.

#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace latgaps {

inline int resolve_workers(int workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs task(i) for every i in [0, n_tasks) exactly once.
template <class Task>
void run_indexed_tasks(int n_tasks, int workers, Task&& task) {
    if (n_tasks <= 0) return;
    workers = resolve_workers(workers);
    if (workers <= 1 || n_tasks == 1) {
        for (int i = 0; i < n_tasks; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    const int n_threads = workers < n_tasks ? workers : n_tasks;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n_tasks) return;
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!failed.exchange(true)) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failed) std::rethrow_exception(first_error);
}

}  // namespace latgaps
