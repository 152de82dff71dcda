#include "swarmgrid/stats/tests.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swarmgrid/errors.hpp"

namespace swarmgrid::stats {

namespace {

// Scaled (x2) average ranks of |diffs|, so tied ranks stay integral.
std::vector<long long> scaled_ranks(const std::vector<double>& magnitudes) {
    const std::size_t n = magnitudes.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return magnitudes[a] < magnitudes[b]; });

    std::vector<long long> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && magnitudes[idx[j + 1]] == magnitudes[idx[i]]) ++j;
        // ranks i+1 .. j+1 share the average; doubled it is (i+j+2).
        const long long doubled_avg = static_cast<long long>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = doubled_avg;
        i = j + 1;
    }
    return ranks;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

} // namespace

double sign_test(std::size_t wins_a, std::size_t wins_b) {
    const std::size_t n = wins_a + wins_b;
    if (n == 0) throw Error("sign_test: at least one non-tied pair is required");
    const std::size_t lo = std::min(wins_a, wins_b);

    // Sum C(n,k) for k = 0..lo; exact in doubles for the n this is used at.
    double coeff = 1.0;
    double tail = 1.0; // k = 0
    for (std::size_t k = 1; k <= lo; ++k) {
        coeff *= static_cast<double>(n - k + 1) / static_cast<double>(k);
        tail += coeff;
    }
    const double p = 2.0 * tail * std::ldexp(1.0, -static_cast<int>(n));
    return std::min(1.0, p);
}

double signed_rank_test(std::span<const double> diffs) {
    std::vector<double> magnitudes;
    std::vector<bool> positive;
    for (double d : diffs) {
        if (d == 0.0) continue;
        magnitudes.push_back(std::fabs(d));
        positive.push_back(d > 0.0);
    }
    const std::size_t n = magnitudes.size();
    if (n == 0) throw AllZeroDiffs("signed_rank_test: all differences are zero");

    const std::vector<long long> ranks2 = scaled_ranks(magnitudes);
    long long w2 = 0;   // doubled positive-rank sum
    long long sum2 = 0; // doubled total rank sum = n(n+1)
    for (std::size_t i = 0; i < n; ++i) {
        sum2 += ranks2[i];
        if (positive[i]) w2 += ranks2[i];
    }

    if (n <= 20) {
        // Exact null: count the 2^n sign assignments reaching each doubled
        // rank sum (subset-sum tally).
        std::vector<double> ways(static_cast<std::size_t>(sum2) + 1, 0.0);
        ways[0] = 1.0;
        long long reach = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const long long r = ranks2[i];
            reach += r;
            for (long long s = reach; s >= r; --s) ways[s] += ways[s - r];
        }
        const double total = std::ldexp(1.0, static_cast<int>(n));
        double below = 0.0, above = 0.0;
        for (long long s = 0; s <= sum2; ++s) {
            if (s <= w2) below += ways[s];
            if (s >= w2) above += ways[s];
        }
        return std::min(1.0, 2.0 * std::min(below, above) / total);
    }

    // Normal approximation with tie correction; work on doubled ranks
    // (mean and variance scale by 2 and 4).
    const double mean2 = static_cast<double>(n) * (n + 1) / 2.0;
    double var2 = static_cast<double>(n) * (n + 1) * (2.0 * n + 1) / 6.0;
    std::vector<double> sorted = magnitudes;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        var2 -= (t * t * t - t) / 12.0 * 4.0; // classic -(t^3-t)/48 pre-scaled
        i = j + 1;
    }
    if (var2 <= 0.0) return 1.0;
    const double delta = static_cast<double>(w2) - mean2;
    const double cc = delta > 0 ? -1.0 : (delta < 0 ? 1.0 : 0.0); // continuity (doubled: 2*0.5)
    const double z = (delta + cc) / std::sqrt(var2);
    return std::min(1.0, 2.0 * (1.0 - normal_cdf(std::fabs(z))));
}

double paired_t_test(std::span<const double> diffs) {
    const std::size_t n = diffs.size();
    if (n < 2) throw Error("paired_t_test: at least two pairs are required");
    double mean = 0.0;
    for (double d : diffs) mean += d;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double d : diffs) ss += (d - mean) * (d - mean);
    const double var = ss / static_cast<double>(n - 1);
    if (var <= 0.0) throw ZeroVariance("paired_t_test: zero variance in differences");
    const double t = mean * std::sqrt(static_cast<double>(n)) / std::sqrt(var);
    const double df = static_cast<double>(n - 1);
    // Two-sided p folds directly into one incomplete-beta call.
    return std::min(1.0, incomplete_beta(df / 2.0, 0.5, df / (df + t * t)));
}

double student_t_cdf(double t, std::size_t df) {
    if (df == 0) throw Error("student_t_cdf: df must be positive");
    const double v = static_cast<double>(df);
    const double p = 0.5 * incomplete_beta(v / 2.0, 0.5, v / (v + t * t));
    return t >= 0.0 ? 1.0 - p : p;
}

// Continued-fraction evaluation (modified Lentz); standard numerical recipe.
double incomplete_beta(double a, double b, double x) {
    if (x < 0.0 || x > 1.0) throw Error("incomplete_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    auto contfrac = [](double a, double b, double x) {
        const double tiny = 1e-300;
        const int max_iter = 500;
        const double eps = 1e-16;
        const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
        double c = 1.0;
        double d = 1.0 - qab * x / qap;
        if (std::fabs(d) < tiny) d = tiny;
        d = 1.0 / d;
        double h = d;
        for (int m = 1; m <= max_iter; ++m) {
            const int m2 = 2 * m;
            double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
            d = 1.0 + aa * d;
            if (std::fabs(d) < tiny) d = tiny;
            c = 1.0 + aa / c;
            if (std::fabs(c) < tiny) c = tiny;
            d = 1.0 / d;
            h *= d * c;
            aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
            d = 1.0 + aa * d;
            if (std::fabs(d) < tiny) d = tiny;
            c = 1.0 + aa / c;
            if (std::fabs(c) < tiny) c = tiny;
            d = 1.0 / d;
            const double del = d * c;
            h *= del;
            if (std::fabs(del - 1.0) < eps) break;
        }
        return h;
    };

    // The front factor is symmetric under (a,b,x) -> (b,a,1-x).
    const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                  a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * contfrac(a, b, x) / a;
    return 1.0 - front * contfrac(b, a, 1.0 - x) / b;
}

} // namespace swarmgrid::stats
