#ifndef SWARMGRID_EXEC_BARRIER_HPP
#define SWARMGRID_EXEC_BARRIER_HPP

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>

#include "swarmgrid/errors.hpp"

namespace swarmgrid::exec {

/// Reusable synchronization point for a fixed set of parties. await() blocks
/// until all parties of the current generation have arrived, then releases
/// them together and advances the generation. The last thread to arrive runs
/// the optional barrier action before anyone is released — the serial hook
/// island algorithms use for migration.
class CyclicBarrier {
public:
    explicit CyclicBarrier(std::size_t parties, std::function<void()> action = nullptr)
        : parties_(parties), action_(std::move(action)) {
        if (parties == 0) throw Error("CyclicBarrier: parties must be positive");
    }

    std::size_t parties() const { return parties_; }

    /// Returns the index of the generation this call completed; every party
    /// of one release observes the same index.
    std::size_t await() {
        std::unique_lock<std::mutex> lock(mutex_);
        if (broken_) throw BrokenBarrierError("barrier is broken");
        const std::size_t gen = generation_;
        if (++waiting_ == parties_) {
            if (action_) {
                try {
                    action_();
                } catch (...) {
                    broken_ = true;
                    waiting_ = 0;
                    cv_.notify_all();
                    throw;
                }
            }
            waiting_ = 0;
            ++generation_;
            cv_.notify_all();
            return gen;
        }
        cv_.wait(lock, [&] { return generation_ != gen || broken_; });
        if (broken_) throw BrokenBarrierError("barrier broken while waiting");
        return gen;
    }

    /// Permanently breaks the barrier; current and future waiters raise
    /// BrokenBarrierError. Used when a party is abandoned (shutdown/abort).
    void break_barrier() {
        std::lock_guard<std::mutex> lock(mutex_);
        broken_ = true;
        cv_.notify_all();
    }

    bool broken() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return broken_;
    }

private:
    std::size_t parties_;
    std::function<void()> action_;
    mutable std::mutex mutex_;
    std::condition_variable cv_;
    std::size_t waiting_ = 0;
    std::size_t generation_ = 0;
    bool broken_ = false;
};

} // namespace swarmgrid::exec

#endif
