#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace verikit::detail {

/// Runs fn(i) for i in [0, n) on at most `concurrency` threads.
/// fn must handle its own exceptions; an escaped exception terminates.
inline void parallel_for(std::size_t n, int concurrency, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t workers = std::min<std::size_t>(n, concurrency < 1 ? 1 : static_cast<std::size_t>(concurrency));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

/// Counting limiter bounding in-flight calls per backend.
class ConcurrencyLimiter {
public:
    explicit ConcurrencyLimiter(int max_concurrent) : available_(max_concurrent < 1 ? 1 : max_concurrent) {}

    void acquire() {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [&] { return available_ > 0; });
        --available_;
    }

    void release() {
        {
            std::lock_guard lock(mu_);
            ++available_;
        }
        cv_.notify_one();
    }

    class Guard {
    public:
        explicit Guard(ConcurrencyLimiter& l) : l_(&l) { l_->acquire(); }
        ~Guard() {
            if (l_) l_->release();
        }
        Guard(const Guard&) = delete;
        Guard& operator=(const Guard&) = delete;

    private:
        ConcurrencyLimiter* l_;
    };

private:
    std::mutex mu_;
    std::condition_variable cv_;
    int available_;
};

}  // namespace verikit::detail
