#ifndef SWARMGRID_STATS_TESTS_HPP
#define SWARMGRID_STATS_TESTS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace swarmgrid::stats {

/// Exact two-sided sign test on paired win counts (ties already dropped):
/// p = 2 * min(P(X <= min), P(X >= max)) for X ~ Binomial(n, 1/2), capped
/// at 1. Exact binomial sums, no approximation.
double sign_test(std::size_t wins_a, std::size_t wins_b);

/// Two-sided Wilcoxon signed-rank test. Zero differences are dropped, tied
/// magnitudes receive average ranks. For n <= 20 the null distribution of
/// the positive-rank sum is computed exactly; beyond that, the normal
/// approximation with tie and continuity corrections is used.
double signed_rank_test(std::span<const double> diffs);

/// Two-sided paired Student t-test on the differences.
double paired_t_test(std::span<const double> diffs);

/// Student t cumulative distribution, via the regularized incomplete beta
/// function (continued fraction); absolute error well below 1e-10.
double student_t_cdf(double t, std::size_t df);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

} // namespace swarmgrid::stats

#endif
