#include "swarmgrid/grad/line_search.hpp"

#include <cmath>
#include <limits>

namespace swarmgrid::grad {

namespace {

constexpr int kMaxBacktracks = 100;
constexpr int kMaxBracketProbes = 25;
constexpr int kMaxSections = 50;

double phi(const EvalContext& f, const DenseVector& x, const DenseVector& d, double t) {
    DenseVector p = x;
    p.axpy(t, d);
    return f(p);
}

// Vertex of the parabola through (a, fa) with slope dfa at a and (b, fb),
// expressed as an offset from a. Returns NaN when the fit degenerates.
double parabola_vertex(double a, double fa, double dfa, double b, double fb) {
    const double span = b - a;
    const double curv = (fb - fa - dfa * span) / (span * span);
    if (curv <= 0.0 || !std::isfinite(curv)) return std::numeric_limits<double>::quiet_NaN();
    return a - dfa / (2.0 * curv);
}

// Root of the derivative secant through (a, dfa), (b, dfb).
double derivative_secant(double a, double dfa, double b, double dfb) {
    const double denominator = dfb - dfa;
    if (denominator == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return a - dfa * (b - a) / denominator;
}

} // namespace

StepResult armijo_step(const EvalContext& f, const DenseVector& x, double fx,
                       const DenseVector& d, const DenseVector& g, const LineSearchParams& p) {
    const double gd = g.dot(d);
    if (gd >= 0.0) throw LineSearchFailed("armijo_step: d is not a descent direction");
    double t = p.gamma;
    for (int m = 0; m < kMaxBacktracks; ++m) {
        const double fn = phi(f, x, d, t);
        if (fn <= fx + p.rho * t * gd) return {t, fn};
        t *= p.beta;
    }
    throw LineSearchFailed("armijo_step: no acceptable step in 100 backtracks");
}

StepResult wolfe_step(const EvalContext& f, const DenseVector& x, double fx, const DenseVector& d,
                      double dphi0, const LineSearchParams& p) {
    if (dphi0 >= 0.0) throw LineSearchFailed("wolfe_step: d is not a descent direction");

    const double curvature_bound = -p.sigma * dphi0;
    auto armijo_ok = [&](double t, double ft) { return ft <= fx + p.rho * t * dphi0; };
    auto wolfe_ok = [&](double t, double ft, double dft) {
        return armijo_ok(t, ft) && std::fabs(dft) <= curvature_bound;
    };

    // Sectioning: [a, b] brackets a Wolfe point, with a the "good" end
    // (Armijo holds at a, and the slope at a points into the interval).
    auto section = [&](double a, double fa, double dfa, double b, double fb) -> StepResult {
        for (int i = 0; i < kMaxSections; ++i) {
            const double lo = a + p.t2 * (b - a);
            const double hi = b - p.t3 * (b - a);
            double u = parabola_vertex(a, fa, dfa, b, fb);
            if (!std::isfinite(u)) u = 0.5 * (lo + hi);
            // Clamp into the sectioning window (signed interval).
            if ((u - lo) * (u - hi) > 0.0) u = std::fabs(u - lo) < std::fabs(u - hi) ? lo : hi;

            const double fu = phi(f, x, d, u);
            if (!armijo_ok(u, fu) || fu >= fa) {
                b = u;
                fb = fu;
                continue;
            }
            const double dfu = directional_derivative(f, x, d, u);
            if (std::fabs(dfu) <= curvature_bound) {
                // One derivative-secant polish; exact for quadratic sections.
                const double v = derivative_secant(a, dfa, u, dfu);
                if (std::isfinite(v) && (v - a) * (v - b) < 0.0 && v != u) {
                    const double fv = phi(f, x, d, v);
                    if (armijo_ok(v, fv)) {
                        const double dfv = directional_derivative(f, x, d, v);
                        if (wolfe_ok(v, fv, dfv)) return {v, fv};
                    }
                }
                return {u, fu};
            }
            if (dfu * (b - a) >= 0.0) {
                b = a;
                fb = fa;
            }
            a = u;
            fa = fu;
            dfa = dfu;
        }
        throw LineSearchFailed("wolfe_step: sectioning failed to locate an acceptable point");
    };

    // Bracketing: expand until the function rises, the slope turns
    // nonnegative, or the improvement rate collapses.
    double t_prev = 0.0, f_prev = fx, df_prev = dphi0;
    double t = p.gamma > 0.0 ? p.gamma : 1.0;
    double last_drop = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kMaxBracketProbes; ++i) {
        const double ft = phi(f, x, d, t);
        if (!armijo_ok(t, ft) || ft >= f_prev) return section(t_prev, f_prev, df_prev, t, ft);

        const double dft = directional_derivative(f, x, d, t);
        if (dft >= 0.0) return section(t, ft, dft, t_prev, f_prev);

        const double drop = f_prev - ft;
        const bool flat = std::fabs(dft) <= curvature_bound;
        const bool stalled = std::isfinite(last_drop) && drop < last_drop / p.bracket_reduction;
        if (flat || stalled) {
            // Still descending but nearly done: polish with the derivative
            // secant, falling back to t (Wolfe already holds there if flat).
            const double v = derivative_secant(t_prev, df_prev, t, dft);
            if (std::isfinite(v) && v > t) {
                const double fv = phi(f, x, d, v);
                if (armijo_ok(v, fv)) {
                    const double dfv = directional_derivative(f, x, d, v);
                    if (wolfe_ok(v, fv, dfv)) return {v, fv};
                    if (dfv >= 0.0) return section(t, ft, dft, v, fv);
                }
            }
            if (flat) return {t, ft};
        }
        last_drop = drop;
        const double t_next = t + p.t1 * (t - t_prev);
        t_prev = t;
        f_prev = ft;
        df_prev = dft;
        t = t_next;
    }
    throw LineSearchFailed("wolfe_step: no bracket found");
}

} // namespace swarmgrid::grad
