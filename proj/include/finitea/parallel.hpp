#pragma once

// One worker per prime. Results land in per-index slots, so the output
// order is the window order regardless of thread count.

#include "finitea/modular.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace finitea {

/// Hardware concurrency, at least 1.
inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

template <class Fn>
auto parallel_map_primes(std::span<const u64> primes, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(u64{}))> {
    using R = decltype(fn(u64{}));
    std::vector<R> out(primes.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) out[i] = fn(primes[i]);
        return out;
    }
    // Largest primes first: per-prime cost grows with p.
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t k = next.fetch_add(1);
                    if (k >= primes.size()) return;
                    const std::size_t i = primes.size() - 1 - k;
                    try {
                        out[i] = fn(primes[i]);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                }
            });
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace finitea
