#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lpp {

inline int default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Fixed pool of long-lived workers running index-range jobs. parallel_for
// blocks until the whole range is done; the calling thread works too. Work
// assignment is by static chunks, so results never depend on scheduling.
class ThreadPool {
public:
    explicit ThreadPool(int workers);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    int workers() const { return static_cast<int>(threads_.size()) + 1; }

    // fn(begin, end) is invoked on disjoint chunks covering [lo, hi).
    void parallel_for(std::int64_t lo, std::int64_t hi,
                      const std::function<void(std::int64_t, std::int64_t)>& fn);

private:
    struct Job {
        const std::function<void(std::int64_t, std::int64_t)>* fn = nullptr;
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        std::int64_t chunk = 0;
        int parts = 0;
    };

    void worker_loop(int index);
    void run_part(const Job& job, int part);

    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cv_start_;
    std::condition_variable cv_done_;
    Job job_;
    std::uint64_t epoch_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

}  // namespace lpp
