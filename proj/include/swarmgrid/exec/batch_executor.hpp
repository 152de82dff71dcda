#ifndef SWARMGRID_EXEC_BATCH_EXECUTOR_HPP
#define SWARMGRID_EXEC_BATCH_EXECUTOR_HPP

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "swarmgrid/errors.hpp"

namespace swarmgrid::exec {

/// In-slot outcome of one task: either a value or a structured failure.
/// Failures never collapse the batch they belong to.
template <class R>
class TaskResult {
public:
    static TaskResult success(R value) {
        TaskResult r;
        r.value_ = std::move(value);
        return r;
    }
    static TaskResult failure(std::string error) {
        TaskResult r;
        r.error_ = std::move(error);
        return r;
    }

    bool ok() const { return value_.has_value(); }
    const R& value() const { return *value_; }
    const std::string& error() const { return error_; }

private:
    TaskResult() = default;
    std::optional<R> value_;
    std::string error_;
};

/// Fixed-size thread pool with blocking batch submission. All pool threads
/// are created eagerly at construction so the run-on-all-threads broadcast
/// has a stable thread set to target. Multiple callers may block in
/// execute_batch concurrently; their tasks interleave in the shared FIFO
/// queue.
class BatchExecutor {
public:
    explicit BatchExecutor(std::size_t pool_size) : pool_size_(pool_size) {
        if (pool_size == 0) throw Error("BatchExecutor: pool size must be positive");
        threads_.reserve(pool_size);
        for (std::size_t i = 0; i < pool_size; ++i)
            threads_.emplace_back([this, i] { worker_loop(i); });
    }

    ~BatchExecutor() { shutdown(); }

    BatchExecutor(const BatchExecutor&) = delete;
    BatchExecutor& operator=(const BatchExecutor&) = delete;

    std::size_t pool_size() const { return pool_size_; }

    /// Stops accepting work, cancels queued jobs, and joins the pool.
    /// Running tasks finish; queued-but-unstarted batch slots fail with an
    /// executor-shut-down error.
    void shutdown() {
        std::deque<Job> orphaned;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (shut_down_) return;
            shut_down_ = true;
            orphaned.swap(queue_);
        }
        cv_.notify_all();
        for (auto& job : orphaned) job(true);
        for (auto& t : threads_)
            if (t.joinable()) t.join();
    }

    /// Runs every task and blocks until all complete; results come back in
    /// task-index order. A task that throws yields a failure in its own slot.
    template <class R>
    std::vector<TaskResult<R>> execute_batch(std::vector<std::function<R()>> tasks) {
        if (tasks.empty()) throw Error("execute_batch: empty task array");

        struct Shared {
            std::mutex m;
            std::condition_variable done_cv;
            std::size_t remaining;
            std::vector<std::optional<TaskResult<R>>> slots;
        };
        auto shared = std::make_shared<Shared>();
        shared->remaining = tasks.size();
        shared->slots.resize(tasks.size());

        for (std::size_t i = 0; i < tasks.size(); ++i) {
            enqueue([shared, i, task = std::move(tasks[i])](bool cancelled) {
                TaskResult<R> result = cancelled
                    ? TaskResult<R>::failure("executor shut down before task ran")
                    : run_one(task);
                std::lock_guard<std::mutex> lock(shared->m);
                shared->slots[i] = std::move(result);
                if (--shared->remaining == 0) shared->done_cv.notify_all();
            });
        }

        std::unique_lock<std::mutex> lock(shared->m);
        shared->done_cv.wait(lock, [&] { return shared->remaining == 0; });

        std::vector<TaskResult<R>> results;
        results.reserve(shared->slots.size());
        for (auto& slot : shared->slots) results.push_back(std::move(*slot));
        return results;
    }

    /// Runs cmd exactly once on every pool thread and returns when all have
    /// finished. Threads that complete early block until the slowest one is
    /// done, which is what pins one execution to each distinct thread.
    void execute_on_all_threads(const std::function<void(std::size_t thread_index)>& cmd) {
        struct Shared {
            std::mutex m;
            std::condition_variable cv;
            std::size_t arrived = 0;
            std::size_t parties;
            std::vector<std::string> errors;
        };
        auto shared = std::make_shared<Shared>();
        shared->parties = pool_size_;

        for (std::size_t i = 0; i < pool_size_; ++i) {
            enqueue([shared, &cmd](bool cancelled) {
                std::string error;
                if (cancelled) {
                    error = "executor shut down before command ran";
                } else {
                    const std::size_t idx = *current_thread_index();
                    try {
                        cmd(idx);
                    } catch (const std::exception& e) {
                        error = e.what();
                    } catch (...) {
                        error = "unknown error";
                    }
                }
                std::unique_lock<std::mutex> lock(shared->m);
                if (!error.empty()) shared->errors.push_back(error);
                if (++shared->arrived == shared->parties) {
                    shared->cv.notify_all();
                } else if (!cancelled) {
                    shared->cv.wait(lock, [&] { return shared->arrived == shared->parties; });
                }
            });
        }

        std::unique_lock<std::mutex> lock(shared->m);
        shared->cv.wait(lock, [&] { return shared->arrived == shared->parties; });
        if (!shared->errors.empty()) {
            std::string what = "execute_on_all_threads: " +
                               std::to_string(shared->errors.size()) + " thread(s) failed: " +
                               shared->errors.front();
            throw Error(what);
        }
    }

    /// Index of the pool thread the caller runs on, when it is a pool thread.
    static std::optional<std::size_t> current_thread_index() { return tls_index(); }

private:
    using Job = std::function<void(bool cancelled)>;

    template <class R>
    static TaskResult<R> run_one(const std::function<R()>& task) {
        try {
            return TaskResult<R>::success(task());
        } catch (const std::exception& e) {
            return TaskResult<R>::failure(e.what());
        } catch (...) {
            return TaskResult<R>::failure("unknown error");
        }
    }

    static std::optional<std::size_t>& tls_index() {
        thread_local std::optional<std::size_t> index;
        return index;
    }

    void enqueue(Job job) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (shut_down_) throw ExecutorShutDown("BatchExecutor is shut down");
            queue_.push_back(std::move(job));
        }
        cv_.notify_one();
    }

    void worker_loop(std::size_t index) {
        tls_index() = index;
        for (;;) {
            Job job;
            {
                std::unique_lock<std::mutex> lock(mutex_);
                cv_.wait(lock, [&] { return shut_down_ || !queue_.empty(); });
                if (queue_.empty()) return; // shut down, nothing left
                job = std::move(queue_.front());
                queue_.pop_front();
            }
            job(false);
        }
    }

    std::size_t pool_size_;
    std::vector<std::thread> threads_;
    std::deque<Job> queue_;
    std::mutex mutex_;
    std::condition_variable cv_;
    bool shut_down_ = false;
};

} // namespace swarmgrid::exec

#endif
