#pragma once
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace mdt {

// Evaluates map(i) for i = 0..count-1, possibly on several threads, then
// folds the results in index order, so the outcome is independent of the
// parallelism degree.
template <class Acc, class Map, class Fold>
void indexed_map_fold(std::size_t count, int jobs, Acc& acc, Map&& map, Fold&& fold) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fold(acc, map(i));
        return;
    }
    using R = decltype(map(std::size_t{0}));
    std::vector<std::optional<R>> results(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = map(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::size_t nt = std::min(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> threads;
    threads.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < count; ++i) fold(acc, std::move(*results[i]));
}

} // namespace mdt
