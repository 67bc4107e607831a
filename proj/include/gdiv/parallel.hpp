#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace gdiv::par {

// Worker cap: set_max_threads() wins, then GDIV_THREADS, then hardware.
inline std::atomic<int>& thread_cap() {
    static std::atomic<int> cap{0};
    return cap;
}

inline void set_max_threads(int n) { thread_cap().store(n > 0 ? n : 0); }

inline int max_threads() {
    int cap = thread_cap().load();
    if (cap > 0) return cap;
    if (const char* env = std::getenv("GDIV_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs body(chunk) for chunk = 0..n_chunks-1 on a pool of workers. Chunk
// boundaries never depend on the worker count, so chunk-indexed results
// reduced in index order are bit-identical for any number of threads.
template <class Body>
void run_chunks(std::size_t n_chunks, const Body& body) {
    int nt = max_threads();
    if (nt > static_cast<int>(n_chunks)) nt = static_cast<int>(n_chunks);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n_chunks || failed.load()) return;
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(error);
}

} // namespace gdiv::par
