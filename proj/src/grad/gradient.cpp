#include "swarmgrid/grad/gradient.hpp"

#include <cmath>

namespace swarmgrid::grad {

namespace {

double component_estimate(const EvalContext& f, DenseVector& probe, std::size_t j, double xj,
                          double h) {
    probe[j] = xj + 2.0 * h;
    const double fp2 = f(probe);
    probe[j] = xj + h;
    const double fp1 = f(probe);
    probe[j] = xj - h;
    const double fm1 = f(probe);
    probe[j] = xj - 2.0 * h;
    const double fm2 = f(probe);
    probe[j] = xj;
    return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
}

} // namespace

DenseVector richardson_gradient(const EvalContext& f, const DenseVector& x, double h_rel,
                                exec::BatchExecutor* executor) {
    const std::size_t dim = x.dim();
    if (f.budget().remaining() < 4 * dim)
        throw BudgetExhausted("richardson_gradient: budget cannot cover 4*D evaluations");

    DenseVector g(dim);
    if (executor && dim > 1) {
        std::vector<std::exception_ptr> errors(dim);
        std::vector<std::function<int()>> tasks;
        tasks.reserve(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            tasks.emplace_back([&f, &x, &g, &errors, j, h_rel]() -> int {
                try {
                    DenseVector probe = x;
                    const double h = h_rel * std::max(1.0, std::fabs(x[j]));
                    g[j] = component_estimate(f, probe, j, x[j], h);
                } catch (...) {
                    errors[j] = std::current_exception();
                }
                return 0;
            });
        }
        executor->execute_batch(std::move(tasks));
        for (std::size_t j = 0; j < dim; ++j)
            if (errors[j]) std::rethrow_exception(errors[j]);
    } else {
        DenseVector probe = x;
        for (std::size_t j = 0; j < dim; ++j) {
            const double h = h_rel * std::max(1.0, std::fabs(x[j]));
            g[j] = component_estimate(f, probe, j, x[j], h);
        }
    }
    return g;
}

double directional_derivative(const EvalContext& f, const DenseVector& x, const DenseVector& d,
                              double t, double h) {
    const double step = h * std::max(1.0, std::fabs(t));
    DenseVector p = x;
    p.axpy(t + step, d);
    const double fp = f(p);
    DenseVector m = x;
    m.axpy(t - step, d);
    const double fm = f(m);
    return (fp - fm) / (2.0 * step);
}

} // namespace swarmgrid::grad
