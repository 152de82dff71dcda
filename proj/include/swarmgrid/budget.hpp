#ifndef SWARMGRID_BUDGET_HPP
#define SWARMGRID_BUDGET_HPP

#include <atomic>
#include <cstdint>
#include <limits>

#include "swarmgrid/errors.hpp"

namespace swarmgrid {

/// Shared function-evaluation budget. Reservation is check-then-increment
/// under a single compare-exchange, so the cap is exact even when many
/// threads evaluate concurrently: used() never exceeds limit().
class EvalBudget {
public:
    explicit EvalBudget(std::uint64_t limit) : limit_(limit) {
        if (limit == 0) throw Error("EvalBudget: limit must be positive");
    }

    static EvalBudget unlimited() { return EvalBudget(std::numeric_limits<std::uint64_t>::max()); }

    /// Reserves n evaluations; returns false (reserving nothing) if fewer
    /// than n remain.
    bool try_reserve(std::uint64_t n = 1) {
        std::uint64_t cur = used_.load(std::memory_order_relaxed);
        for (;;) {
            if (cur + n > limit_) return false;
            if (used_.compare_exchange_weak(cur, cur + n, std::memory_order_relaxed)) return true;
        }
    }

    void reserve(std::uint64_t n = 1) {
        if (!try_reserve(n)) throw BudgetExhausted("evaluation budget exhausted");
    }

    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const { return limit_; }
    std::uint64_t remaining() const {
        const std::uint64_t u = used();
        return u >= limit_ ? 0 : limit_ - u;
    }
    bool exhausted() const { return remaining() == 0; }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

} // namespace swarmgrid

#endif
