#include "lpp/parallel.hpp"

#include <algorithm>

namespace lpp {

ThreadPool::ThreadPool(int workers) {
    const int extra = std::max(0, workers - 1);
    threads_.reserve(extra);
    for (int i = 0; i < extra; ++i) threads_.emplace_back([this, i] { worker_loop(i + 1); });
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard lock(mu_);
        stop_ = true;
        ++epoch_;
    }
    cv_start_.notify_all();
    for (auto& t : threads_) t.join();
}

void ThreadPool::run_part(const Job& job, int part) {
    const std::int64_t b = job.lo + job.chunk * part;
    const std::int64_t e = std::min(job.hi, b + job.chunk);
    if (b < e) (*job.fn)(b, e);
}

void ThreadPool::parallel_for(std::int64_t lo, std::int64_t hi,
                              const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (hi <= lo) return;
    const int nthreads = workers();
    if (nthreads == 1 || hi - lo == 1) {
        fn(lo, hi);
        return;
    }
    Job job;
    job.fn = &fn;
    job.lo = lo;
    job.hi = hi;
    job.parts = nthreads;
    job.chunk = (hi - lo + nthreads - 1) / nthreads;
    {
        std::lock_guard lock(mu_);
        job_ = job;
        pending_ = static_cast<int>(threads_.size());
        ++epoch_;
    }
    cv_start_.notify_all();
    run_part(job, 0);  // caller takes part 0
    std::unique_lock lock(mu_);
    cv_done_.wait(lock, [this] { return pending_ == 0; });
}

void ThreadPool::worker_loop(int index) {
    std::uint64_t seen = 0;
    for (;;) {
        Job job;
        {
            std::unique_lock lock(mu_);
            cv_start_.wait(lock, [&] { return stop_ || epoch_ != seen; });
            seen = epoch_;
            if (stop_) return;
            job = job_;
        }
        run_part(job, index);
        {
            std::lock_guard lock(mu_);
            if (--pending_ == 0) cv_done_.notify_all();
        }
    }
}

}  // namespace lpp
