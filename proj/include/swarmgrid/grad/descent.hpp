#ifndef SWARMGRID_GRAD_DESCENT_HPP
#define SWARMGRID_GRAD_DESCENT_HPP

#include <span>
#include <vector>

#include "swarmgrid/grad/line_search.hpp"
#include "swarmgrid/optimizer.hpp"

namespace swarmgrid::grad {

struct DescentOptions {
    LineSearchParams ls;
    double grad_tol = 1e-6;
    double h_rel = 1e-5;
    std::size_t max_iters = 500;
    exec::BatchExecutor* executor = nullptr; // parallel multi-start when set
};

enum class CgUpdate { FletcherReeves, PolakRibiere };

/// Steepest descent with the Armijo rule, one descent per start point;
/// returns the best result over all starts. Stops a start at the gradient
/// tolerance (sup-norm), the iteration cap, or budget exhaustion, whichever
/// comes first; exhaustion is graceful (best-so-far is kept).
OptResult asd_run(const ObjectiveFunction& f, const ParamMap& params,
                  std::span<const DenseVector> starts, const DescentOptions& opt,
                  EvalBudget& budget);

/// Nonlinear conjugate gradient with Fletcher-Reeves or clamped
/// Polak-Ribiere direction updates, restarting on -g every D iterations or
/// whenever the direction loses descent. A failed line search retries once
/// from the steepest-descent direction before giving that start up.
OptResult cg_run(const ObjectiveFunction& f, const ParamMap& params,
                 std::span<const DenseVector> starts, CgUpdate update, const DescentOptions& opt,
                 EvalBudget& budget);

} // namespace swarmgrid::grad

#endif
