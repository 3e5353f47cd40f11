#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace segdraw::cli {

template <class F>
std::vector<Result> fan_out(const std::vector<Source>& srcs, int jobs, F f) {
    std::vector<Result> rs(srcs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < srcs.size(); i = next++) {
            try {
                rs[i] = f(i, srcs[i]);
            } catch (const std::exception& e) {
                rs[i] = {Failure, "", srcs[i].ref + ": error: " + e.what() + "\n"};
            }
        }
    };
    const int k = std::max(1, std::min<int>(jobs, static_cast<int>(srcs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < k; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return rs;
}

}  // namespace segdraw::cli
