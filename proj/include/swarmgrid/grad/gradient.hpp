#ifndef SWARMGRID_GRAD_GRADIENT_HPP
#define SWARMGRID_GRAD_GRADIENT_HPP

#include "swarmgrid/budget.hpp"
#include "swarmgrid/exec/batch_executor.hpp"
#include "swarmgrid/function.hpp"
#include "swarmgrid/param_map.hpp"
#include "swarmgrid/vector.hpp"

namespace swarmgrid::grad {

/// Bundles an objective with its parameters and the shared evaluation
/// budget; every probe a derivative-based method makes goes through here and
/// is charged.
class EvalContext {
public:
    EvalContext(const ObjectiveFunction& f, const ParamMap& params, EvalBudget& budget)
        : f_(f), params_(params), budget_(budget) {}

    double operator()(const DenseVector& x) const { return evaluate(f_, x, params_, budget_); }

    EvalBudget& budget() const { return budget_; }
    const ObjectiveFunction& function() const { return f_; }
    const ParamMap& params() const { return params_; }

private:
    const ObjectiveFunction& f_;
    const ParamMap& params_;
    EvalBudget& budget_;
};

/// Five-point central-difference gradient (4th-order extrapolation):
///   g_j = (-f(x+2h e_j) + 8 f(x+h e_j) - 8 f(x-h e_j) + f(x-2h e_j)) / (12h)
/// with relative step h_j = h_rel * max(1, |x_j|). Exact on quartics up to
/// rounding; O(h^4) truncation beyond. Charges exactly 4*D evaluations; when
/// fewer remain, raises BudgetExhausted before evaluating anything. With an
/// executor, the per-component stencils run concurrently.
DenseVector richardson_gradient(const EvalContext& f, const DenseVector& x, double h_rel = 1e-5,
                                exec::BatchExecutor* executor = nullptr);

/// Directional derivative of f at x along d via a central difference on the
/// scalar section t -> f(x + t d). Costs 2 evaluations.
double directional_derivative(const EvalContext& f, const DenseVector& x, const DenseVector& d,
                              double t, double h = 1e-6);

} // namespace swarmgrid::grad

#endif
