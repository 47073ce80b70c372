#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pfs {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// out[i] = fn(i) for i < count, computed by a small worker pool. Work is
/// handed out in chunks from an atomic counter; results land at their index,
/// so the output order never depends on scheduling. The first exception
/// thrown by any worker is rethrown here.
template <class R, class F> std::vector<R> parallel_map(std::size_t count, unsigned threads, F fn) {
    std::vector<R> out(count);
    threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    const std::size_t chunk = std::max<std::size_t>(1, count / (threads * 16));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t start = next.fetch_add(chunk);
            if (start >= count) return;
            std::size_t stop = std::min(count, start + chunk);
            try {
                for (std::size_t i = start; i < stop; ++i) out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace pfs
