#include "swarmgrid/mh/island.hpp"

#include <cmath>

#include "swarmgrid/errors.hpp"

namespace swarmgrid::mh {

std::optional<std::size_t> starvation_target(const std::vector<std::size_t>& pops) {
    std::size_t max_pop = 0;
    for (std::size_t p : pops) max_pop = std::max(max_pop, p);
    for (std::size_t i = 0; i < pops.size(); ++i) {
        if (pops[i] == 0) return i;
        if (static_cast<double>(pops[i]) < static_cast<double>(max_pop) / 2.5) return i;
    }
    return std::nullopt;
}

std::size_t ring_route(std::size_t my_id, std::size_t n_islands) {
    return (my_id + n_islands - 1) % n_islands;
}

MigrationRoute make_route(const std::string& name) {
    if (name == "none") return nullptr;
    if (name == "starvation") {
        return [](std::size_t my_id, std::size_t, const std::vector<std::size_t>& pops,
                  const ParamMap&) -> std::optional<std::size_t> {
            auto t = starvation_target(pops);
            if (t && *t == my_id) return std::nullopt;
            return t;
        };
    }
    if (name == "ring") {
        return [](std::size_t my_id, std::size_t, const std::vector<std::size_t>& pops,
                  const ParamMap&) -> std::optional<std::size_t> {
            if (pops.size() < 2) return std::nullopt;
            return ring_route(my_id, pops.size());
        };
    }
    throw MissingConfig("unknown migration route: " + name);
}

SearchBox SearchBox::uniform(std::size_t dim, double lo, double hi) {
    SearchBox b;
    b.lo.assign(dim, lo);
    b.hi.assign(dim, hi);
    return b;
}

SearchBox SearchBox::from_params(const ParamMap& params, std::size_t dim,
                                 const std::string& prefix) {
    const std::string lo_key = prefix + ".lo";
    const std::string hi_key = prefix + ".hi";
    if (!params.has(lo_key) || !params.has(hi_key))
        throw MissingConfig("missing search box keys " + lo_key + "/" + hi_key);

    auto read_side = [&](const std::string& key) {
        std::vector<double> side;
        try {
            side.assign(dim, params.get_real(key));
        } catch (const ConfigTypeError&) {
            side = params.get_vec(key);
        }
        if (side.size() != dim)
            throw DimensionMismatch("search box key " + key + " has wrong dimension");
        return side;
    };

    SearchBox b;
    b.lo = read_side(lo_key);
    b.hi = read_side(hi_key);
    for (std::size_t j = 0; j < dim; ++j)
        if (!(b.lo[j] < b.hi[j])) throw Error("search box is empty in coordinate " +
                                              std::to_string(j));
    return b;
}

DenseVector SearchBox::random_point(RngStream& rng) const {
    DenseVector x(dim());
    for (std::size_t j = 0; j < dim(); ++j) x[j] = rng.uniform(lo[j], hi[j]);
    return x;
}

void SearchBox::clamp(DenseVector& x) const {
    for (std::size_t j = 0; j < dim(); ++j) x[j] = std::clamp(x[j], lo[j], hi[j]);
}

bool SearchBox::contains(const DenseVector& x) const {
    for (std::size_t j = 0; j < dim(); ++j)
        if (x[j] < lo[j] || x[j] > hi[j]) return false;
    return true;
}

std::size_t roulette_pick(std::span<const double> weights, RngStream& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) return rng.uniform_index(weights.size());
    const double target = rng.uniform() * total;
    double running = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        running += weights[i];
        if (target < running) return i;
    }
    return weights.size() - 1;
}

std::size_t draw_age_limit(RngStream& rng, double mean, double var) {
    const double draw = rng.gaussian(mean, std::sqrt(std::max(0.0, var)));
    const double clamped = std::max(1.0, std::round(draw));
    if (clamped >= static_cast<double>(SIZE_MAX)) return SIZE_MAX;
    return static_cast<std::size_t>(clamped);
}

} // namespace swarmgrid::mh
