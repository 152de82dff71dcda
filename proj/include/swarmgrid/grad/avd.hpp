#ifndef SWARMGRID_GRAD_AVD_HPP
#define SWARMGRID_GRAD_AVD_HPP

#include <vector>

#include "swarmgrid/grad/gradient.hpp"
#include "swarmgrid/optimizer.hpp"
#include "swarmgrid/rng.hpp"

namespace swarmgrid::grad {

/// Per-coordinate feasible set: a continuous interval, or a finite set of
/// admissible values (scanned exhaustively).
struct VarDomain {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> values; // nonempty => discrete

    bool discrete() const { return !values.empty(); }

    static VarDomain interval(double lo, double hi) { return {lo, hi, {}}; }

    /// Grid lo, lo+step, ... capped at hi.
    static VarDomain grid(double lo, double hi, double step);
};

struct AvdOptions {
    double sweep_tol = 1e-12;    // stop when a full sweep improves less
    std::size_t max_sweeps = 200;
    bool shuffle_order = false;  // "random" try-order; default cyclic
    std::uint64_t shuffle_seed = 0;
};

/// Alternating-variables descent: coordinates are minimized one at a time in
/// repeating sweeps, golden-section on intervals and exhaustive scan on
/// discrete sets. The objective is nonincreasing after every coordinate
/// update; budget exhaustion ends the run gracefully.
OptResult avd_run(const ObjectiveFunction& f, const ParamMap& params, const DenseVector& x0,
                  const std::vector<VarDomain>& domains, const AvdOptions& opt,
                  EvalBudget& budget);

} // namespace swarmgrid::grad

#endif
