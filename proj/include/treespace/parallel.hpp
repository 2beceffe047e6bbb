#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace treespace {

/// Worker count: the TREESPACE_JOBS environment variable, else 1.
inline int default_jobs() {
    if (const char* env = std::getenv("TREESPACE_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

/// Static-chunked parallel loop; fn(i) must touch only its own slot, so the
/// result is independent of the worker count.
inline void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    jobs = std::min(jobs, count);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (int i = w; i < count; i += jobs) fn(i);
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace treespace
