#ifndef SWARMGRID_EXEC_ACCUMULATOR_HPP
#define SWARMGRID_EXEC_ACCUMULATOR_HPP

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <utility>

#include "swarmgrid/vector.hpp"

namespace swarmgrid::exec {

/// Thread-safe reduction sink over an associative-commutative operation with
/// identity. min/max are exactly order-independent; floating-point sum is
/// order-independent only when the additions are exact, which is what the
/// provided reductions are used for (counts, exact tallies).
template <class T>
class Accumulator {
public:
    using Op = std::function<T(const T&, const T&)>;

    Accumulator(T identity, Op op) : identity_(identity), current_(identity), op_(std::move(op)) {}

    void add(const T& contribution) {
        std::lock_guard<std::mutex> lock(mutex_);
        current_ = op_(current_, contribution);
        ++count_;
    }

    T get() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return current_;
    }

    std::size_t count() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return count_;
    }

    void reset() {
        std::lock_guard<std::mutex> lock(mutex_);
        current_ = identity_;
        count_ = 0;
    }

private:
    T identity_;
    T current_;
    Op op_;
    mutable std::mutex mutex_;
    std::size_t count_ = 0;
};

inline Accumulator<double> min_accumulator() {
    return Accumulator<double>(std::numeric_limits<double>::infinity(),
                               [](const double& a, const double& b) { return std::min(a, b); });
}

inline Accumulator<double> max_accumulator() {
    return Accumulator<double>(-std::numeric_limits<double>::infinity(),
                               [](const double& a, const double& b) { return std::max(a, b); });
}

inline Accumulator<double> sum_accumulator() {
    return Accumulator<double>(0.0, [](const double& a, const double& b) { return a + b; });
}

/// Minimum over (value, argument) pairs. Ties on value break toward the
/// lexicographically smaller argument so the result is independent of
/// contribution order.
class ArgMinAccumulator {
public:
    void add(double value, const DenseVector& arg) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (!best_ || value < best_->first ||
            (value == best_->first && arg.data() < best_->second.data())) {
            best_ = std::make_pair(value, arg);
        }
    }

    std::optional<std::pair<double, DenseVector>> get() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return best_;
    }

private:
    mutable std::mutex mutex_;
    std::optional<std::pair<double, DenseVector>> best_;
};

} // namespace swarmgrid::exec

#endif
