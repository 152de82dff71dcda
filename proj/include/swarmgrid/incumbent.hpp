#ifndef SWARMGRID_INCUMBENT_HPP
#define SWARMGRID_INCUMBENT_HPP

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swarmgrid/vector.hpp"

namespace swarmgrid {

using IncumbentObserver = std::function<void(const DenseVector& arg, double value)>;

/// Best-so-far sharing point between cooperating optimizers. A publish that
/// strictly improves the stored best replaces it and is delivered to every
/// registered observer exactly once (synchronously, on the publisher's
/// thread); a non-improving publish is dropped. An observer attached late
/// immediately receives the current best. The stored best value is monotone
/// nonincreasing under any interleaving of concurrent publishers.
class IncumbentChannel {
public:
    explicit IncumbentChannel(std::string subject_id = "") : subject_id_(std::move(subject_id)) {}

    const std::string& subject_id() const { return subject_id_; }

    void attach(IncumbentObserver obs) {
        std::optional<std::pair<DenseVector, double>> snapshot;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            observers_.push_back(obs);
            snapshot = best_;
        }
        if (snapshot) obs(snapshot->first, snapshot->second);
    }

    /// Returns true when the publish improved the stored best (and was
    /// delivered).
    bool publish(const DenseVector& arg, double value) {
        std::vector<IncumbentObserver> to_notify;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (best_ && value >= best_->second) return false;
            best_ = std::make_pair(arg, value);
            to_notify = observers_;
        }
        // Delivery happens outside the lock so observers may publish back.
        for (auto& obs : to_notify) obs(arg, value);
        return true;
    }

    std::optional<std::pair<DenseVector, double>> best() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return best_;
    }

    std::size_t observer_count() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return observers_.size();
    }

private:
    std::string subject_id_;
    mutable std::mutex mutex_;
    std::vector<IncumbentObserver> observers_;
    std::optional<std::pair<DenseVector, double>> best_;
};

} // namespace swarmgrid

#endif
