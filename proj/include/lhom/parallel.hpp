#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lhom {

/// Evaluate fn(0..task_count-1) across a worker pool and return the results
/// in task order, independent of scheduling. If any task throws, remaining
/// tasks are abandoned and the earliest-index recorded failure is rethrown.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t task_count, std::size_t workers, Fn&& fn) {
    if (workers == 0) throw std::domain_error("parallel_map: workers must be >= 1");
    std::vector<Result> results(task_count);
    if (task_count == 0) return results;

    workers = std::min(workers, task_count);
    if (workers == 1) {
        for (std::size_t i = 0; i < task_count; ++i) results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::size_t first_error_index = task_count;
    std::exception_ptr first_error;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= task_count) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (i < first_error_index) {
                    first_error_index = i;
                    first_error = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    if (first_error) std::rethrow_exception(first_error);
    return results;
}

/// Default worker count: the hardware's available parallelism, at least 1.
inline std::size_t default_workers() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<std::size_t>(n);
}

}  // namespace lhom
