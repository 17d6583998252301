#ifndef MONOGEN_PARALLEL_HPP
#define MONOGEN_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace monogen {

/* Worker threads used by the enumeration cores: MONOGEN_THREADS if set,
 * otherwise the hardware concurrency. */
unsigned worker_threads();

/* Calls fn(i) for i in [0, n) on up to worker_threads() threads, in
 * contiguous blocks. fn must only touch state owned by index i. */
template <typename Fn>
void parallel_for(std::size_t n, Fn && fn)
{
    std::size_t threads = std::min<std::size_t>(worker_threads(), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = n * t / threads; i < n * (t + 1) / threads; ++i)
                fn(i);
        });
    }
    for (auto & th : pool)
        th.join();
}

}  // namespace monogen

#endif  // MONOGEN_PARALLEL_HPP
