#include "swarmgrid/grad/avd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace swarmgrid::grad {

namespace {

constexpr double kGolden = 0.6180339887498949; // (sqrt(5)-1)/2

// Golden-section minimization of the coordinate section; returns (best t,
// best f). Assumes unimodality on [lo, hi]; otherwise settles on some local
// dip, which is all a local method promises.
std::pair<double, double> golden_section(const std::function<double(double)>& section, double lo,
                                         double hi, double current_t, double current_f) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = section(x1);
    double f2 = section(x2);
    const double width_tol = 1e-10 * std::max(1.0, std::fabs(hi - lo));
    for (int i = 0; i < 200 && (b - a) > width_tol; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = section(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = section(x2);
        }
    }
    double best_t = f1 <= f2 ? x1 : x2;
    double best_f = std::min(f1, f2);
    if (current_f <= best_f) return {current_t, current_f};
    return {best_t, best_f};
}

} // namespace

VarDomain VarDomain::grid(double lo, double hi, double step) {
    VarDomain d{lo, hi, {}};
    if (step <= 0.0) throw Error("VarDomain::grid: step must be positive");
    for (double v = lo; v <= hi + 1e-12 * step; v += step) d.values.push_back(std::min(v, hi));
    if (d.values.empty()) d.values.push_back(lo);
    return d;
}

OptResult avd_run(const ObjectiveFunction& f, const ParamMap& params, const DenseVector& x0,
                  const std::vector<VarDomain>& domains, const AvdOptions& opt,
                  EvalBudget& budget) {
    if (domains.size() != x0.dim())
        throw DimensionMismatch("avd_run: one domain per coordinate is required");
    for (const auto& d : domains)
        if (!d.discrete() && !(d.lo < d.hi)) throw Error("avd_run: empty interval domain");

    EvalContext ctx(f, params, budget);
    DenseVector x = x0;
    double fx;
    try {
        fx = ctx(x);
    } catch (const BudgetExhausted&) {
        return {x, std::numeric_limits<double>::infinity(), budget.used()};
    }

    std::vector<std::size_t> order(x.dim());
    std::iota(order.begin(), order.end(), 0);
    RngStream shuffle_rng(opt.shuffle_seed, 0x41764421ULL);

    try {
        for (std::size_t sweep = 0; sweep < opt.max_sweeps; ++sweep) {
            if (opt.shuffle_order) {
                for (std::size_t i = order.size(); i > 1; --i)
                    std::swap(order[i - 1], order[shuffle_rng.uniform_index(i)]);
            }
            const double f_before = fx;
            for (std::size_t j : order) {
                const VarDomain& dom = domains[j];
                auto section = [&](double t) {
                    DenseVector probe = x;
                    probe[j] = t;
                    return ctx(probe);
                };
                double best_t = x[j], best_f = fx;
                if (dom.discrete()) {
                    for (double v : dom.values) {
                        if (v == x[j]) continue;
                        const double fv = section(v);
                        if (fv < best_f) {
                            best_f = fv;
                            best_t = v;
                        }
                    }
                } else {
                    std::tie(best_t, best_f) = golden_section(section, dom.lo, dom.hi, x[j], fx);
                }
                x[j] = best_t;
                fx = best_f;
            }
            if (f_before - fx < opt.sweep_tol) break;
        }
    } catch (const BudgetExhausted&) {
        // graceful: return the best point reached so far
    }
    return {x, fx, budget.used()};
}

} // namespace swarmgrid::grad
