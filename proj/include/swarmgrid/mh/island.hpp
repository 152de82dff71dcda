#ifndef SWARMGRID_MH_ISLAND_HPP
#define SWARMGRID_MH_ISLAND_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "swarmgrid/param_map.hpp"
#include "swarmgrid/rng.hpp"
#include "swarmgrid/vector.hpp"

namespace swarmgrid::mh {

/// Population member: the chromosome the search manipulates, its cached
/// fitness, and the aging bookkeeping (birth generation plus the age limit
/// drawn once at birth).
struct Individual {
    DenseVector chromosome;
    double fitness = 0.0;
    std::size_t birth_generation = 0;
    std::size_t age_limit = SIZE_MAX;
};

/// Sub-population evolved by a dedicated thread. Population size may vary
/// across generations (aging, migration); the id and rng stream are stable.
template <class Member>
struct IslandT {
    std::size_t id = 0;
    std::vector<Member> members;
    std::size_t generation = 0;
    RngStream rng{0, 0};
};

using Island = IslandT<Individual>;

/// Decides where an island's emigrants head; nullopt disables emigration
/// from that island this generation. The destination never equals the
/// source, and at most 2 individuals leave an island per generation no
/// matter what the route returns.
using MigrationRoute = std::function<std::optional<std::size_t>(
    std::size_t my_id, std::size_t generation, const std::vector<std::size_t>& island_pops,
    const ParamMap& params)>;

/// Starvation rule: the lowest-id island whose population is 0 or strictly
/// below some other island's population divided by 2.5; nullopt when no
/// island qualifies.
std::optional<std::size_t> starvation_target(const std::vector<std::size_t>& pops);

/// Unidirectional (counter-clockwise, i.e. decreasing-id) ring neighbor.
std::size_t ring_route(std::size_t my_id, std::size_t n_islands);

/// Route by name: "starvation", "ring", or "none".
MigrationRoute make_route(const std::string& name);

struct MigrationEvent {
    std::size_t from;
    std::size_t to;
    std::size_t count;
};

/// End-of-generation migration: each island whose route yields a destination
/// sends its (up to) 2 fittest members there; emigrants leave the source.
/// Runs single-threaded at the generation barrier. Route decisions all see
/// the same population snapshot, taken before any move.
template <class Member>
void migrate(std::vector<IslandT<Member>>& islands, const MigrationRoute& route,
             const ParamMap& params, std::vector<MigrationEvent>* trace = nullptr) {
    if (!route || islands.size() < 2) return;
    std::vector<std::size_t> pops(islands.size());
    for (std::size_t i = 0; i < islands.size(); ++i) pops[i] = islands[i].members.size();

    for (std::size_t src = 0; src < islands.size(); ++src) {
        auto dest = route(src, islands[src].generation, pops, params);
        if (!dest || *dest == src || *dest >= islands.size()) continue;
        auto& from = islands[src].members;
        const std::size_t count = std::min<std::size_t>(2, from.size());
        if (count == 0) continue;
        // Move the `count` fittest; ties break toward the lower index.
        std::partial_sort(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(count),
                          from.end(),
                          [](const Member& a, const Member& b) { return a.fitness < b.fitness; });
        auto& to = islands[*dest].members;
        for (std::size_t k = 0; k < count; ++k) to.push_back(std::move(from[k]));
        from.erase(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(count));
        if (trace) trace->push_back({src, *dest, count});
    }
}

/// Per-coordinate box constraints.
struct SearchBox {
    std::vector<double> lo;
    std::vector<double> hi;

    std::size_t dim() const { return lo.size(); }
    double width(std::size_t j) const { return hi[j] - lo[j]; }

    static SearchBox uniform(std::size_t dim, double lo, double hi);

    /// Reads "<prefix>.lo"/"<prefix>.hi" as either scalars or D-vectors.
    static SearchBox from_params(const ParamMap& params, std::size_t dim,
                                 const std::string& prefix = "box");

    DenseVector random_point(RngStream& rng) const;
    void clamp(DenseVector& x) const;
    bool contains(const DenseVector& x) const;
};

/// Fitness-proportional pick over nonnegative weights; degenerates to a
/// uniform pick when every weight is zero.
std::size_t roulette_pick(std::span<const double> weights, RngStream& rng);

/// Age limit drawn at birth: max(1, round(N(mean, var))).
std::size_t draw_age_limit(RngStream& rng, double mean, double var);

} // namespace swarmgrid::mh

#endif
