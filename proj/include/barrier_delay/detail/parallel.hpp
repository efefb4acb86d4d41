/*
   Copyright 2026, The barrier-delay authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BARRIER_DELAY_DETAIL_PARALLEL_HPP
#define BARRIER_DELAY_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace barrier_delay::detail
{

/// Worker count: hardware concurrency, capped by BARRIER_DELAY_THREADS.
inline unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BARRIER_DELAY_THREADS")) {
        unsigned cap = 0;
        const auto* end = env + std::strlen(env);
        if (auto [p, ec] = std::from_chars(env, end, cap); ec == std::errc{} && p == end && cap > 0)
            n = std::min(n, cap);
    }
    return n;
}

/// Calls body(i) for i in [0, count) on a static partition. Each index is
/// visited exactly once; results must be written to disjoint slots.
template <typename Body>
void parallel_for(std::size_t count, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(count, lo + chunk);
            if (lo >= hi)
                break;
            pool.emplace_back([&, lo, hi] {
                try {
                    for (std::size_t i = lo; i < hi; ++i)
                        body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                }
            });
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace barrier_delay::detail

#endif
