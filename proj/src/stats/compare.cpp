#include "swarmgrid/stats/compare.hpp"

#include "swarmgrid/errors.hpp"
#include "swarmgrid/stats/tests.hpp"

namespace swarmgrid::stats {

std::string PairwiseCell::tag_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < significant_tests.size(); ++i) {
        if (i) s += ",";
        s += significant_tests[i];
    }
    return s + "]";
}

PairwiseCell compare_pair(const MethodResult& a, const MethodResult& b, double alpha) {
    if (a.means.size() != b.means.size() || a.means.empty())
        throw Error("compare_pair: methods must share a nonempty function suite");

    std::size_t strict_a = 0, strict_b = 0, ties = 0;
    std::vector<double> diffs;
    diffs.reserve(a.means.size());
    for (std::size_t i = 0; i < a.means.size(); ++i) {
        diffs.push_back(a.means[i] - b.means[i]);
        if (a.means[i] < b.means[i])
            ++strict_a;
        else if (b.means[i] < a.means[i])
            ++strict_b;
        else
            ++ties;
    }

    PairwiseCell cell;
    const double score_a = strict_a + 0.5 * ties;
    const double score_b = strict_b + 0.5 * ties;
    if (score_a > score_b) {
        cell.winner = a.method;
        cell.wins_winner = score_a;
        cell.wins_loser = score_b;
    } else if (score_b > score_a) {
        cell.winner = b.method;
        cell.wins_winner = score_b;
        cell.wins_loser = score_a;
    } else {
        cell.wins_winner = cell.wins_loser = score_a;
    }

    if (strict_a + strict_b > 0 && sign_test(strict_a, strict_b) < alpha)
        cell.significant_tests.push_back("s");
    try {
        if (signed_rank_test(diffs) < alpha) cell.significant_tests.push_back("sr");
    } catch (const AllZeroDiffs&) {
    }
    try {
        if (diffs.size() >= 2 && paired_t_test(diffs) < alpha)
            cell.significant_tests.push_back("t");
    } catch (const ZeroVariance&) {
    }
    return cell;
}

} // namespace swarmgrid::stats
