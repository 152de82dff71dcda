#ifndef SWARMGRID_OPTIMIZER_HPP
#define SWARMGRID_OPTIMIZER_HPP

#include <atomic>
#include <cstdint>
#include <mutex>
#include <string>
#include <utility>

#include "swarmgrid/budget.hpp"
#include "swarmgrid/errors.hpp"
#include "swarmgrid/function.hpp"
#include "swarmgrid/incumbent.hpp"
#include "swarmgrid/param_map.hpp"
#include "swarmgrid/vector.hpp"

namespace swarmgrid {

/// Universal optimizer return contract: the best argument seen, its value,
/// and how many evaluations the run consumed.
struct OptResult {
    DenseVector arg;
    double value = 0.0;
    std::uint64_t evals_used = 0;
};

/// Base contract every optimizer in the toolkit implements. set_params() and
/// minimize() are serialized against each other: either raises OptimizerBusy
/// when a run is in progress. minimize() returns gracefully with the best
/// point found so far when the evaluation budget drains mid-run.
class Optimizer {
public:
    virtual ~Optimizer() = default;

    const std::string& name() const { return name_; }

    void set_params(const ParamMap& params) {
        if (running_.load(std::memory_order_acquire))
            throw OptimizerBusy("set_params while a minimize run is in progress on '" + name_ +
                                "'");
        std::lock_guard<std::mutex> lock(params_mutex_);
        params_ = params;
        configured_ = true;
    }

    ParamMap params() const {
        std::lock_guard<std::mutex> lock(params_mutex_);
        return params_;
    }

    OptResult minimize(const ObjectiveFunction& f) {
        bool expected = false;
        if (!running_.compare_exchange_strong(expected, true, std::memory_order_acq_rel))
            throw OptimizerBusy("minimize while another run is in progress on '" + name_ + "'");
        struct Guard {
            std::atomic<bool>& flag;
            ~Guard() { flag.store(false, std::memory_order_release); }
        } guard{running_};

        ParamMap snapshot;
        {
            std::lock_guard<std::mutex> lock(params_mutex_);
            if (!configured_) throw MissingConfig("set_params must be called before minimize");
            snapshot = params_;
        }
        return run(f, snapshot);
    }

    /// Incumbent channel this optimizer publishes improvements on.
    IncumbentChannel& incumbents() { return channel_; }

protected:
    explicit Optimizer(std::string name) : name_(std::move(name)), channel_(name_) {}

    virtual OptResult run(const ObjectiveFunction& f, const ParamMap& params) = 0;

    /// Budget from params: explicit "budget.limit", else 1000 * D.
    static std::uint64_t budget_limit(const ParamMap& params, std::size_t dim) {
        if (params.has("budget.limit")) {
            const auto v = params.get_int("budget.limit");
            if (v <= 0) throw MissingConfig("budget.limit must be positive");
            return static_cast<std::uint64_t>(v);
        }
        return 1000ull * static_cast<std::uint64_t>(dim);
    }

private:
    std::string name_;
    mutable std::mutex params_mutex_;
    ParamMap params_;
    bool configured_ = false;
    std::atomic<bool> running_{false};
    IncumbentChannel channel_;
};

} // namespace swarmgrid

#endif
