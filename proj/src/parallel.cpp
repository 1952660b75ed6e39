#include "coronakit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace coronakit {

namespace {

std::atomic<unsigned> g_override{0};

unsigned env_threads() {
    const char* s = std::getenv("CORONAKIT_THREADS");
    if (!s || !*s) return 0;
    try {
        const long v = std::stol(s);
        return v > 0 ? static_cast<unsigned>(v) : 0;
    } catch (...) {
        return 0;
    }
}

}  // namespace

unsigned thread_count() {
    if (unsigned o = g_override.load()) return o;
    if (unsigned e = env_threads()) return e;
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(unsigned n) { g_override.store(n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace coronakit
