#ifndef SWARMGRID_GRAD_LINE_SEARCH_HPP
#define SWARMGRID_GRAD_LINE_SEARCH_HPP

#include "swarmgrid/grad/gradient.hpp"
#include "swarmgrid/vector.hpp"

namespace swarmgrid::grad {

/// Line-search constants shared by the backtracking (Armijo) and the
/// bracketing/sectioning (Wolfe) searches:
///   rho    sufficient-decrease fraction, in (0,1)
///   beta   backtracking shrink factor, in (0,1)
///   gamma  initial backtracking step
///   sigma  curvature fraction for the Wolfe test (rho < sigma < 1)
///   t1     bracket expansion factor
///   t2,t3  sectioning clamp fractions: trials stay in [a+t2(b-a), b-t3(b-a)]
///   bracket_reduction  expansion stops once the per-probe improvement drops
///                      below the previous improvement divided by this rate
struct LineSearchParams {
    double rho = 0.1;
    double beta = 0.8;
    double gamma = 1.0;
    double sigma = 0.9;
    double t1 = 9.0;
    double t2 = 0.1;
    double t3 = 0.5;
    double bracket_reduction = 2.0;
};

struct StepResult {
    double t = 0.0;      // accepted step size
    double f_new = 0.0;  // f(x + t d), reusable by the caller
};

/// Backtracking Armijo rule: the largest t = gamma * beta^m, m >= 0, with
///   f(x + t d) <= f(x) + rho * t * (g . d).
/// Requires a descent direction (g . d < 0); gives up after 100 backtracks.
StepResult armijo_step(const EvalContext& f, const DenseVector& x, double fx,
                       const DenseVector& d, const DenseVector& g, const LineSearchParams& p);

/// Bracketing/sectioning search satisfying the two-sided Wolfe conditions
///   f(x+td) <= f(x) + rho t g.d   and   |phi'(t)| <= sigma |g.d|,
/// with directional derivatives estimated by central differences. Sectioning
/// interpolates a parabola from the good end and polishes the accepted point
/// with one derivative-secant step, which lands on the exact minimizer for
/// quadratic sections.
StepResult wolfe_step(const EvalContext& f, const DenseVector& x, double fx, const DenseVector& d,
                      double dphi0, const LineSearchParams& p);

} // namespace swarmgrid::grad

#endif
