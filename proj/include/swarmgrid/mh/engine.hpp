#ifndef SWARMGRID_MH_ENGINE_HPP
#define SWARMGRID_MH_ENGINE_HPP

#include <atomic>
#include <limits>
#include <memory>

#include "swarmgrid/budget.hpp"
#include "swarmgrid/codec.hpp"
#include "swarmgrid/exec/accumulator.hpp"
#include "swarmgrid/exec/barrier.hpp"
#include "swarmgrid/exec/batch_executor.hpp"
#include "swarmgrid/function.hpp"
#include "swarmgrid/incumbent.hpp"
#include "swarmgrid/mh/island.hpp"
#include "swarmgrid/optimizer.hpp"

namespace swarmgrid::mh {

/// Best-so-far sink shared by all islands of a run; every improvement is
/// also published on the optimizer's incumbent channel when one is attached.
class BestTracker {
public:
    explicit BestTracker(IncumbentChannel* channel = nullptr) : channel_(channel) {}

    void record(double value, const DenseVector& arg) {
        acc_.add(value, arg);
        if (channel_) channel_->publish(arg, value);
    }

    std::optional<std::pair<double, DenseVector>> best() const { return acc_.get(); }

    OptResult result(const EvalBudget& budget) const {
        auto b = acc_.get();
        if (!b) return {DenseVector(), std::numeric_limits<double>::infinity(), budget.used()};
        return {b->second, b->first, budget.used()};
    }

private:
    exec::ArgMinAccumulator acc_;
    IncumbentChannel* channel_;
};

/// Where fitness evaluations actually run: locally in-process, or shipped to
/// a worker network. A batch reserves its full budget up front (all or
/// nothing, so local and distributed runs drain a budget identically) and
/// maps infeasible (non-finite) results to +inf.
class EvalBackend {
public:
    virtual ~EvalBackend() = default;
    virtual std::vector<double> evaluate_batch(std::span<const DenseVector> args) = 0;
};

class LocalBackend final : public EvalBackend {
public:
    LocalBackend(const ObjectiveFunction& f, const ParamMap& params, EvalBudget& budget)
        : f_(f), params_(params), budget_(budget) {}

    std::vector<double> evaluate_batch(std::span<const DenseVector> args) override {
        if (args.empty()) return {};
        if (!budget_.try_reserve(args.size()))
            throw BudgetExhausted("evaluation budget cannot cover the batch");
        std::vector<double> out;
        out.reserve(args.size());
        for (const auto& x : args) {
            if (!x.is_finite()) throw NonFiniteResult("evaluate_batch: non-finite argument");
            const double v = f_.value(x, params_);
            out.push_back(std::isfinite(v) ? v : std::numeric_limits<double>::infinity());
        }
        return out;
    }

private:
    const ObjectiveFunction& f_;
    const ParamMap& params_;
    EvalBudget& budget_;
};

/// The gate all island algorithms evaluate fitness through: genotype to
/// argument via the codec, evaluation via the backend, best-so-far tracking.
class FitnessFn {
public:
    FitnessFn(EvalBackend& backend, BestTracker& tracker,
              const GenotypeCodec* codec = nullptr)
        : backend_(backend), tracker_(tracker), codec_(codec) {}

    double operator()(const DenseVector& genotype) {
        DenseVector one[] = {genotype};
        return batch(one).front();
    }

    std::vector<double> batch(std::span<const DenseVector> genotypes) {
        std::vector<double> values;
        if (codec_) {
            std::vector<DenseVector> args;
            args.reserve(genotypes.size());
            for (const auto& g : genotypes) args.push_back(codec_->to_argument(g));
            values = backend_.evaluate_batch(args);
            for (std::size_t i = 0; i < values.size(); ++i)
                if (std::isfinite(values[i])) tracker_.record(values[i], args[i]);
        } else {
            values = backend_.evaluate_batch(genotypes);
            for (std::size_t i = 0; i < values.size(); ++i)
                if (std::isfinite(values[i])) tracker_.record(values[i], genotypes[i]);
        }
        return values;
    }

private:
    EvalBackend& backend_;
    BestTracker& tracker_;
    const GenotypeCodec* codec_;
};

struct IslandModelConfig {
    std::size_t n_islands = 1;
    std::size_t generations = 0; // 0 = run until the budget drains
    MigrationRoute route;        // empty = no migration
    std::uint64_t seed = 0;
    ParamMap params;
    std::vector<MigrationEvent>* migration_trace = nullptr;
};

/// Thread-per-island driver. Each island runs init once, then one step per
/// generation; all islands synchronize on a barrier at generation end, where
/// migration runs single-threaded and the uniform stop decision is made
/// (budget drained, generation cap, or an island failure). Every island
/// exits at the same generation, so a drained budget never strands a thread.
template <class Member, class InitFn, class StepFn>
OptResult run_island_model(const IslandModelConfig& cfg, EvalBudget& budget,
                           BestTracker& tracker, InitFn init, StepFn step) {
    const std::size_t n = cfg.n_islands;
    if (n == 0) throw MissingConfig("island model: need at least one island");
    if (cfg.generations == 0 && budget.limit() == std::numeric_limits<std::uint64_t>::max())
        throw MissingConfig("island model: unbounded generations require a finite budget");

    std::vector<IslandT<Member>> islands(n);
    for (std::size_t i = 0; i < n; ++i) {
        islands[i].id = i;
        islands[i].rng = RngStream(cfg.seed, i);
    }

    const std::size_t max_gens =
        cfg.generations == 0 ? std::numeric_limits<std::size_t>::max() : cfg.generations;
    std::atomic<bool> stop_requested{false};
    std::atomic<bool> stop{false};
    std::size_t completed_gens = 0;

    exec::CyclicBarrier barrier(n, [&] {
        migrate(islands, cfg.route, cfg.params, cfg.migration_trace);
        ++completed_gens;
        if (stop_requested.load(std::memory_order_relaxed) || completed_gens >= max_gens ||
            budget.exhausted())
            stop.store(true, std::memory_order_relaxed);
    });

    std::vector<std::exception_ptr> fatals(n);
    auto island_task = [&](std::size_t i) -> int {
        try {
            init(islands[i]);
        } catch (const BudgetExhausted&) {
            stop_requested.store(true, std::memory_order_relaxed);
        } catch (...) {
            fatals[i] = std::current_exception();
            stop_requested.store(true, std::memory_order_relaxed);
        }
        for (;;) {
            if (!fatals[i] && !stop_requested.load(std::memory_order_relaxed)) {
                try {
                    step(islands[i]);
                } catch (const BudgetExhausted&) {
                    stop_requested.store(true, std::memory_order_relaxed);
                } catch (...) {
                    fatals[i] = std::current_exception();
                    stop_requested.store(true, std::memory_order_relaxed);
                }
            }
            islands[i].generation += 1;
            barrier.await();
            if (stop.load(std::memory_order_relaxed)) break;
        }
        return 0;
    };

    if (n == 1) {
        island_task(0);
    } else {
        exec::BatchExecutor pool(n);
        std::vector<std::function<int()>> tasks;
        tasks.reserve(n);
        for (std::size_t i = 0; i < n; ++i) tasks.emplace_back([&, i] { return island_task(i); });
        pool.execute_batch(std::move(tasks));
    }
    for (auto& fatal : fatals)
        if (fatal) std::rethrow_exception(fatal);

    return tracker.result(budget);
}

} // namespace swarmgrid::mh

#endif
