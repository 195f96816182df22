#ifndef TRICHAIN_CONCURRENT_HPP
#define TRICHAIN_CONCURRENT_HPP

#include <condition_variable>
#include <deque>
#include <exception>
#include <functional>
#include <future>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace trichain {

enum class Strategy { Level, Bubble };
enum class Mode { LazardWu, Kalkbrener };
enum class Parallel { S, C, CF };

/// One of the 12 solver configurations: strategy x mode x parallel
/// configuration, plus the worker count.
struct SolveConfig {
    Strategy strategy = Strategy::Level;
    Mode mode = Mode::LazardWu;
    Parallel parallel = Parallel::S;
    unsigned workers = 1;
    bool removeRedundant = true;  // debug switch for RRC

    bool coarseAsync() const { return parallel != Parallel::S; }
    bool fineAsync() const { return parallel == Parallel::CF; }
};

std::string toString(Strategy s);
std::string toString(Mode m);
std::string toString(Parallel p);

/// Default worker count: hardware parallelism - 1, at least 1.
unsigned defaultWorkerCount();

/// Fixed pool of event-loop workers. Tasks are handed to an idle worker
/// or refused; callers run refused tasks inline, so an exhausted pool can
/// never deadlock recursive submissions.
class WorkerPool {
public:
    explicit WorkerPool(unsigned capacity);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    unsigned capacity() const { return capacity_; }

    /// Hands the task to an idle worker; returns false when none is idle
    /// (the task was not accepted).
    bool tryDispatch(std::function<void()> task);

private:
    void workerLoop();

    const unsigned capacity_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<std::function<void()>> queue_;
    unsigned idle_ = 0;
    bool stop_ = false;
    std::vector<std::thread> threads_;
};

/// Join handle for a task; wait() rethrows the task's failure, if any.
class TaskHandle {
public:
    TaskHandle() = default;
    explicit TaskHandle(std::shared_future<void> f) : fut_(std::move(f)) {}
    void wait() {
        if (fut_.valid()) fut_.get();
    }

private:
    std::shared_future<void> fut_;
};

/// Executes task exactly once: on a pooled worker when one is idle,
/// otherwise inline on the caller (completing before return).
TaskHandle submitOrInline(WorkerPool* pool, std::function<void()> task);

/// Runs a and b, both exactly once, returning after both complete. In the
/// serial configuration (or without a pool) runs a then b inline.
template <class FA, class FB>
auto forkJoin2(WorkerPool* pool, const SolveConfig& cfg, FA&& fa, FB&& fb) {
    using RA = std::invoke_result_t<FA&>;
    using RB = std::invoke_result_t<FB&>;
    if (!cfg.coarseAsync() || pool == nullptr) {
        RA a = fa();
        RB b = fb();
        return std::pair<RA, RB>(std::move(a), std::move(b));
    }
    std::optional<RA> ra;
    TaskHandle ha = submitOrInline(pool, [&] { ra.emplace(fa()); });
    std::optional<RB> rb;
    std::exception_ptr eb;
    try {
        rb.emplace(fb());
    } catch (...) {
        eb = std::current_exception();
    }
    std::exception_ptr ea;
    try {
        ha.wait();
    } catch (...) {
        ea = std::current_exception();
    }
    if (ea) std::rethrow_exception(ea);
    if (eb) std::rethrow_exception(eb);
    return std::pair<RA, RB>(std::move(*ra), std::move(*rb));
}

/// Grain-size-1 parallel for: one task per item, the final item runs on
/// the caller; barrier on return; the lowest-index failure propagates
/// after all items settle. Sequential in-order under the serial config.
void parallelForGrainOne(WorkerPool* pool, const SolveConfig& cfg, std::size_t n,
                         const std::function<void(std::size_t)>& body);

/// Asynchronous producer-consumer conduit. Multiple producers may share a
/// channel (each producer's objects stay in order); one consumer drains it.
template <class Obj>
class GeneratorChannel {
public:
    /// Producer side. Throws std::logic_error after setComplete.
    void generateObject(Obj obj) {
        std::lock_guard<std::mutex> lk(mu_);
        if (completed_) throw std::logic_error("GeneratorChannel: generate after setComplete");
        queue_.push_back(std::move(obj));
        cv_.notify_one();
    }

    /// Declares the stream finished; idempotent.
    void setComplete() {
        std::lock_guard<std::mutex> lk(mu_);
        completed_ = true;
        cv_.notify_all();
    }

    /// Poisons the channel; the consumer rethrows from getNextObject once
    /// the queue is drained.
    void fail(std::exception_ptr e) {
        std::lock_guard<std::mutex> lk(mu_);
        if (!error_) error_ = e;
        completed_ = true;
        cv_.notify_all();
    }

    /// Consumer side: blocks until an object arrives or the stream ends.
    /// Returns false iff no more objects will be available.
    bool getNextObject(Obj& out) {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [&] { return !queue_.empty() || completed_; });
        if (!queue_.empty()) {
            out = std::move(queue_.front());
            queue_.pop_front();
            return true;
        }
        if (error_) std::rethrow_exception(error_);
        return false;
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<Obj> queue_;
    bool completed_ = false;
    std::exception_ptr error_;
};

/// Consumer handle that owns the channel and runs the producer either
/// inline (before the constructor returns) or as a pooled task. The
/// consumed sequence is identical either way for deterministic producers.
template <class Obj>
class Generator {
public:
    using Producer = std::function<void(GeneratorChannel<Obj>&)>;

    Generator(WorkerPool* pool, bool async, Producer producer)
        : ch_(std::make_shared<GeneratorChannel<Obj>>()) {
        auto ch = ch_;
        auto run = [ch, producer = std::move(producer)] {
            try {
                producer(*ch);
                ch->setComplete();
            } catch (...) {
                ch->fail(std::current_exception());
            }
        };
        if (async && pool != nullptr) {
            handle_ = submitOrInline(pool, std::move(run));
        } else {
            run();
        }
    }

    bool next(Obj& out) { return ch_->getNextObject(out); }

    GeneratorChannel<Obj>& channel() { return *ch_; }

private:
    std::shared_ptr<GeneratorChannel<Obj>> ch_;
    TaskHandle handle_;
};

}  // namespace trichain

#endif
