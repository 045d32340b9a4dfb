#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace symm {

// runs fn(0..njobs-1) across nthreads workers (0 = hardware concurrency);
// each job writes only its own output slot, so results do not depend on
// interleaving
inline void parallel_for(int njobs, const std::function<void(int)>& fn, int nthreads = 0) {
    if (nthreads <= 0) nthreads = static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min(nthreads, njobs);
    if (nthreads <= 1) {
        for (int i = 0; i < njobs; i++) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < nthreads; t++) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < njobs; i += nthreads) fn(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace symm
