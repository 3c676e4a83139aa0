#pragma once

/// Data-parallel map-reduce over an index range with an associative merge.
/// All engine values are immutable once built, so leaves may run on any
/// thread; the merge order is fixed (by chunk index) to keep results
/// deterministic regardless of completion order.

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qpf {

inline unsigned hardware_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

namespace detail {
inline std::atomic<unsigned>& default_thread_slot() {
    static std::atomic<unsigned> slot{0};  // 0 = unset
    return slot;
}
}  // namespace detail

inline void set_default_threads(unsigned t) { detail::default_thread_slot().store(t); }

/// Resolution order: set_default_threads() > QPF_THREADS > hardware.
inline unsigned default_threads() {
    const unsigned set = detail::default_thread_slot().load();
    if (set != 0) return set;
    if (const char* env = std::getenv("QPF_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return hardware_threads();
}

/// result = merge over i in [0, count) of leaf(i); merge(acc, x) must be
/// associative. threads = 0 picks the default.
template <class T, class Leaf, class Merge>
T parallel_map_reduce(std::size_t count, T init, Leaf leaf, Merge merge, unsigned threads = 0) {
    if (threads == 0) threads = default_threads();
    if (threads <= 1 || count <= 1) {
        T acc = std::move(init);
        for (std::size_t i = 0; i < count; ++i) merge(acc, leaf(i));
        return acc;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(threads, count));
    std::vector<std::vector<std::size_t>> assigned(workers);
    for (std::size_t i = 0; i < count; ++i) assigned[i % workers].push_back(i);
    std::vector<T> partial(workers, init);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i : assigned[w]) merge(partial[w], leaf(i));
        });
    for (auto& t : pool) t.join();
    T acc = std::move(init);
    for (unsigned w = 0; w < workers; ++w) merge(acc, std::move(partial[w]));
    return acc;
}

}  // namespace qpf
