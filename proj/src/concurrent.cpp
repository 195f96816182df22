#include "trichain/concurrent.hpp"

#include <algorithm>

namespace trichain {

std::string toString(Strategy s) { return s == Strategy::Level ? "level" : "bubble"; }
std::string toString(Mode m) { return m == Mode::LazardWu ? "lazard-wu" : "kalkbrener"; }
std::string toString(Parallel p) {
    switch (p) {
        case Parallel::S: return "s";
        case Parallel::C: return "c";
        default: return "cf";
    }
}

unsigned defaultWorkerCount() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 1 ? hw - 1 : 1;
}

WorkerPool::WorkerPool(unsigned capacity) : capacity_(capacity) {
    threads_.reserve(capacity);
    for (unsigned i = 0; i < capacity; ++i) threads_.emplace_back([this] { workerLoop(); });
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard<std::mutex> lk(mu_);
        stop_ = true;
        cv_.notify_all();
    }
    for (auto& t : threads_) t.join();
}

bool WorkerPool::tryDispatch(std::function<void()> task) {
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (idle_ == 0) return false;
        --idle_;  // reserve the worker that will pick this up
        queue_.push_back(std::move(task));
    }
    cv_.notify_one();
    return true;
}

void WorkerPool::workerLoop() {
    std::unique_lock<std::mutex> lk(mu_);
    for (;;) {
        ++idle_;
        cv_.wait(lk, [&] { return stop_ || !queue_.empty(); });
        if (!queue_.empty()) {
            auto task = std::move(queue_.front());
            queue_.pop_front();
            lk.unlock();
            task();
            lk.lock();
            continue;  // idle_ was consumed by tryDispatch
        }
        if (stop_) {
            --idle_;
            return;
        }
    }
}

TaskHandle submitOrInline(WorkerPool* pool, std::function<void()> task) {
    auto packaged = std::make_shared<std::packaged_task<void()>>(std::move(task));
    std::shared_future<void> fut = packaged->get_future().share();
    auto run = [packaged] { (*packaged)(); };
    if (pool == nullptr || !pool->tryDispatch(run)) run();
    return TaskHandle(std::move(fut));
}

void parallelForGrainOne(WorkerPool* pool, const SolveConfig& cfg, std::size_t n,
                         const std::function<void(std::size_t)>& body) {
    (void)pool;
    if (n == 0) return;
    if (!cfg.coarseAsync()) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    // grain size 1: one manually spawned thread per item except the last,
    // which runs on the caller
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> threads;
    threads.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        threads.emplace_back([&body, &errors, i] {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    try {
        body(n - 1);
    } catch (...) {
        errors[n - 1] = std::current_exception();
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace trichain
