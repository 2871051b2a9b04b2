#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fixcode {

/// Runs body(worker, begin, end) over [0, total) split into chunks pulled by
/// `workers` threads. Callers must combine per-worker results in a way that
/// does not depend on which worker handled which chunk.
template <class Body>
void parallel_chunks(std::size_t total, unsigned workers, std::size_t chunk, Body&& body) {
    if (total == 0) return;
    workers = std::max(1u, workers);
    chunk = std::max<std::size_t>(1, chunk);
    if (workers == 1) {
        for (std::size_t b = 0; b < total; b += chunk) body(0u, b, std::min(total, b + chunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::size_t b = next.fetch_add(chunk);
                    if (b >= total) break;
                    body(w, b, std::min(total, b + chunk));
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(total);
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace fixcode
