#include "digitdrift/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace digitdrift {

unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("DIGITDRIFT_THREADS")) {
        long requested = std::strtol(env, nullptr, 10);
        if (requested >= 1) return static_cast<unsigned>(std::min<long>(requested, 256));
    }
    return hw;
}

void parallel_for(uint64_t total,
                  const std::function<void(unsigned, uint64_t, uint64_t)>& body) {
    unsigned workers = worker_count();
    if (total == 0) return;
    if (workers > total) workers = static_cast<unsigned>(total);
    if (workers <= 1) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    uint64_t chunk = total / workers;
    uint64_t rest = total % workers;
    uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t end = begin + chunk + (w < rest ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            try {
                body(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace digitdrift
