#ifndef DEGENLIFT_PARALLEL_HPP
#define DEGENLIFT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace degenlift {

// Worker count: DEGENLIFT_THREADS if set to a positive integer, otherwise
// the hardware concurrency.
int thread_count();

// Applies fn to every item. Results keep the input order; if several calls
// throw, the exception of the lowest index is rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) -> std::vector<decltype(fn(items.front()))>
{
    using R = decltype(fn(items.front()));
    std::vector<std::optional<R>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), items.size());
    if (workers <= 1) {
        std::vector<R> out;
        out.reserve(items.size());
        for (const auto& it : items) {
            out.push_back(fn(it));
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                slots[i].emplace(fn(items[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    for (auto& th : pool) {
        th.join();
    }
    std::vector<R> out;
    out.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

}  // namespace degenlift

#endif
