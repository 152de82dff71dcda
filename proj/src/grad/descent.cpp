#include "swarmgrid/grad/descent.hpp"

#include <cmath>
#include <limits>

#include "swarmgrid/exec/accumulator.hpp"

namespace swarmgrid::grad {

namespace {

struct StartOutcome {
    DenseVector arg;
    double value;
};

StartOutcome asd_one(const EvalContext& ctx, DenseVector x, const DescentOptions& opt) {
    double fx;
    try {
        fx = ctx(x);
    } catch (const BudgetExhausted&) {
        return {x, std::numeric_limits<double>::infinity()};
    }
    try {
        for (std::size_t iter = 0; iter < opt.max_iters; ++iter) {
            const DenseVector g = richardson_gradient(ctx, x, opt.h_rel);
            if (g.norm_inf() <= opt.grad_tol) break;
            DenseVector d(x.dim());
            for (std::size_t j = 0; j < x.dim(); ++j) d[j] = -g[j];
            const StepResult step = armijo_step(ctx, x, fx, d, g, opt.ls);
            x.axpy(step.t, d);
            fx = step.f_new;
        }
    } catch (const BudgetExhausted&) {
        // graceful: keep the best point reached
    } catch (const LineSearchFailed&) {
    }
    return {x, fx};
}

StartOutcome cg_one(const EvalContext& ctx, DenseVector x, CgUpdate update,
                    const DescentOptions& opt) {
    const std::size_t dim = x.dim();
    double fx;
    try {
        fx = ctx(x);
    } catch (const BudgetExhausted&) {
        return {x, std::numeric_limits<double>::infinity()};
    }

    try {
        DenseVector g = richardson_gradient(ctx, x, opt.h_rel);
        DenseVector d(dim);
        for (std::size_t j = 0; j < dim; ++j) d[j] = -g[j];
        std::size_t since_restart = 0;
        bool retried_steepest = false;

        for (std::size_t iter = 0; iter < opt.max_iters; ++iter) {
            if (g.norm_inf() <= opt.grad_tol) break;

            double gd = g.dot(d);
            if (gd >= 0.0 || since_restart >= dim) {
                for (std::size_t j = 0; j < dim; ++j) d[j] = -g[j];
                gd = g.dot(d);
                since_restart = 0;
            }

            StepResult step;
            try {
                step = wolfe_step(ctx, x, fx, d, gd, opt.ls);
                retried_steepest = false;
            } catch (const LineSearchFailed&) {
                if (retried_steepest) break; // this start is done
                for (std::size_t j = 0; j < dim; ++j) d[j] = -g[j];
                since_restart = 0;
                retried_steepest = true;
                continue;
            }

            x.axpy(step.t, d);
            fx = step.f_new;
            const DenseVector g_new = richardson_gradient(ctx, x, opt.h_rel);

            double beta = 0.0;
            const double gg = g.dot(g);
            if (gg > 0.0) {
                if (update == CgUpdate::FletcherReeves) {
                    beta = g_new.dot(g_new) / gg;
                } else {
                    double num = 0.0;
                    for (std::size_t j = 0; j < dim; ++j) num += g_new[j] * (g_new[j] - g[j]);
                    beta = std::max(0.0, num / gg);
                }
            }
            for (std::size_t j = 0; j < dim; ++j) d[j] = beta * d[j] - g_new[j];
            g = g_new;
            ++since_restart;
        }
    } catch (const BudgetExhausted&) {
    }
    return {x, fx};
}

template <class RunOne>
OptResult best_over_starts(const ObjectiveFunction& f, const ParamMap& params,
                           std::span<const DenseVector> starts, EvalBudget& budget,
                           exec::BatchExecutor* executor, RunOne run_one) {
    if (starts.empty()) throw MissingConfig("descent: at least one start point is required");
    EvalContext ctx(f, params, budget);
    exec::ArgMinAccumulator best;

    if (executor && starts.size() > 1) {
        std::vector<std::function<int()>> tasks;
        tasks.reserve(starts.size());
        for (const auto& s : starts) {
            tasks.emplace_back([&ctx, &best, s, &run_one]() -> int {
                const StartOutcome out = run_one(ctx, s);
                if (std::isfinite(out.value)) best.add(out.value, out.arg);
                return 0;
            });
        }
        executor->execute_batch(std::move(tasks));
    } else {
        for (const auto& s : starts) {
            const StartOutcome out = run_one(ctx, s);
            if (std::isfinite(out.value)) best.add(out.value, out.arg);
            if (budget.exhausted()) break;
        }
    }

    const auto found = best.get();
    if (!found) {
        // Budget drained before any start finished its first evaluation.
        return {starts.empty() ? DenseVector() : DenseVector(starts[0]),
                std::numeric_limits<double>::infinity(), budget.used()};
    }
    return {found->second, found->first, budget.used()};
}

} // namespace

OptResult asd_run(const ObjectiveFunction& f, const ParamMap& params,
                  std::span<const DenseVector> starts, const DescentOptions& opt,
                  EvalBudget& budget) {
    return best_over_starts(f, params, starts, budget, opt.executor,
                            [&opt](const EvalContext& ctx, const DenseVector& s) {
                                return asd_one(ctx, s, opt);
                            });
}

OptResult cg_run(const ObjectiveFunction& f, const ParamMap& params,
                 std::span<const DenseVector> starts, CgUpdate update, const DescentOptions& opt,
                 EvalBudget& budget) {
    return best_over_starts(f, params, starts, budget, opt.executor,
                            [update, &opt](const EvalContext& ctx, const DenseVector& s) {
                                return cg_one(ctx, s, update, opt);
                            });
}

} // namespace swarmgrid::grad
