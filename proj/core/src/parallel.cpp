#include "dynuq/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace dynuq {

namespace {
thread_local bool inside_worker = false;
}

int max_threads() {
    static const int cached = [] {
        if (const char* env = std::getenv("DYNUQ_THREADS")) {
            try {
                int v = std::stoi(env);
                if (v >= 1) return v;
            } catch (const std::exception&) {
            }
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    return cached;
}

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
    const int count = end - begin;
    if (count <= 0) return;
    const int workers = std::min(max_threads(), count);
    if (workers <= 1 || inside_worker) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    const int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = begin + w * chunk;
        const int hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            inside_worker = true;
            for (int i = lo; i < hi; ++i) fn(i);
            inside_worker = false;
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace dynuq
