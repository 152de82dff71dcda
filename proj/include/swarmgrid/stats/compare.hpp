#ifndef SWARMGRID_STATS_COMPARE_HPP
#define SWARMGRID_STATS_COMPARE_HPP

#include <string>
#include <vector>

namespace swarmgrid::stats {

/// One method's aggregated outcome over a common, ordered function suite;
/// each entry is the mean best value of the repeated runs on that function.
struct MethodResult {
    std::string method;
    std::vector<double> means;
};

/// Outcome of one pairwise comparison. The winner is the method with the
/// larger per-function win count (exact ties on a function contribute half a
/// win to each side); an empty winner denotes an overall tie. Tags list the
/// tests ("s", "sr", "t") whose two-sided p fell below alpha.
struct PairwiseCell {
    std::string winner;
    std::vector<std::string> significant_tests;
    double wins_winner = 0.0;
    double wins_loser = 0.0;

    std::string tag_string() const; // e.g. "[s,sr]"
};

PairwiseCell compare_pair(const MethodResult& a, const MethodResult& b, double alpha = 0.05);

} // namespace swarmgrid::stats

#endif
