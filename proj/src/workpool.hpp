#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace minev {

// Worker count: explicit value if positive, else MINEV_JOBS from the
// environment, else hardware concurrency capped at 8.
inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("MINEV_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return int(hw > 8 ? 8 : hw);
}

// Runs f(i) for i in [0, count). Each call writes only to caller-owned slot i,
// so results are identical for any worker count; the first exception thrown by
// a worker is rethrown here.
template <class F>
void parallel_for(size_t count, int jobs, F&& f) {
    jobs = resolve_jobs(jobs);
    if (jobs == 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        try {
            for (size_t i; (i = next.fetch_add(1)) < count;) f(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);  // drain remaining work
        }
    };
    size_t spawn = size_t(jobs) < count ? size_t(jobs) : count;
    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace minev
