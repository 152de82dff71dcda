#include "swarmgrid/mh/ga.hpp"

#include <cmath>

#include "swarmgrid/mh/dist_eval.hpp"

namespace swarmgrid::mh {

CrossoverOp one_point_crossover() {
    return [](const DenseVector& p1, const DenseVector& p2, RngStream& rng) {
        DenseVector child = p1;
        if (p1.dim() >= 2) {
            const std::size_t cut = 1 + rng.uniform_index(p1.dim() - 1);
            for (std::size_t j = cut; j < p1.dim(); ++j) child[j] = p2[j];
        }
        return child;
    };
}

CrossoverOp uniform_crossover() {
    return [](const DenseVector& p1, const DenseVector& p2, RngStream& rng) {
        DenseVector child = p1;
        for (std::size_t j = 0; j < p1.dim(); ++j)
            if (rng.bernoulli(0.5)) child[j] = p2[j];
        return child;
    };
}

MutationOp gaussian_mutation(double sigma_fraction) {
    return [sigma_fraction](double allele, std::size_t j, const SearchBox& box, RngStream& rng) {
        return allele + rng.gaussian(0.0, sigma_fraction * box.width(j));
    };
}

MutationOp reset_mutation() {
    return [](double, std::size_t j, const SearchBox& box, RngStream& rng) {
        return rng.uniform(box.lo[j], box.hi[j]);
    };
}

void ga_generation(Island& island, FitnessFn& fitness, const SearchBox& box,
                   const GaOptions& opt) {
    auto& members = island.members;
    if (members.empty()) return; // starved island, waiting for immigrants

    const std::size_t n = members.size();

    // Minimization transform for the roulette wheel. Infeasible members
    // (fitness +inf) get weight zero.
    double max_f = -std::numeric_limits<double>::infinity();
    for (const auto& m : members)
        if (std::isfinite(m.fitness)) max_f = std::max(max_f, m.fitness);
    std::vector<double> weights(n, 0.0);
    if (std::isfinite(max_f))
        for (std::size_t i = 0; i < n; ++i)
            if (std::isfinite(members[i].fitness)) weights[i] = max_f - members[i].fitness + 1e-12;

    std::size_t elite = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (members[i].fitness < members[elite].fitness) elite = i;

    std::vector<DenseVector> children;
    std::vector<std::size_t> child_ages;
    children.reserve(n - 1);
    child_ages.reserve(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const std::size_t p1 = roulette_pick(weights, island.rng);
        const std::size_t p2 = roulette_pick(weights, island.rng);
        DenseVector child = island.rng.bernoulli(opt.xover_prob)
                                ? opt.xover(members[p1].chromosome, members[p2].chromosome,
                                            island.rng)
                                : members[p1].chromosome;
        for (std::size_t j = 0; j < child.dim(); ++j)
            if (island.rng.bernoulli(opt.mut_prob))
                child[j] = opt.mutator(child[j], j, box, island.rng);
        box.clamp(child);
        child_ages.push_back(draw_age_limit(island.rng, opt.age_mean, opt.age_var));
        children.push_back(std::move(child));
    }

    // May raise BudgetExhausted, in which case this generation never happened.
    const std::vector<double> values = fitness.batch(children);

    const std::size_t next_gen = island.generation + 1;
    std::vector<Individual> survivors;
    survivors.reserve(n);
    survivors.push_back(members[elite]); // elitism
    for (std::size_t k = 0; k < children.size(); ++k)
        survivors.push_back(Individual{std::move(children[k]), values[k], next_gen,
                                       child_ages[k]});

    // Aging: nobody outlives the limit drawn at birth.
    std::erase_if(survivors, [next_gen](const Individual& m) {
        return next_gen - m.birth_generation > m.age_limit;
    });
    members = std::move(survivors);
}

OptResult GaOptimizer::run(const ObjectiveFunction& f, const ParamMap& params) {
    RunContext rc = make_run_context(f, params, &incumbents());

    GaOptions opt;
    opt.islands = static_cast<std::size_t>(params.get_int("ga.islands", 1));
    opt.popsize = static_cast<std::size_t>(params.get_int("ga.popsize", 100));
    opt.generations = static_cast<std::size_t>(params.get_int("ga.gens", 0));
    opt.xover_prob = params.get_real("ga.xoverprob", 0.7);
    opt.mut_prob = params.get_real("ga.mutprob", 0.1);
    opt.age_mean = params.get_real("ga.agelimit.mean", 1e9);
    opt.age_var = params.get_real("ga.agelimit.var", 0.0);
    opt.route = params.get_str("ga.immigrationroute", "starvation");
    if (params.get_str("ga.xover", "onepoint") == "uniform") opt.xover = uniform_crossover();
    const std::string mutator = params.get_str("ga.mutator", "gaussian");
    if (mutator == "reset")
        opt.mutator = reset_mutation();
    else
        opt.mutator = gaussian_mutation(params.get_real("ga.mut.sigma", 0.05));
    if (opt.popsize == 0) throw MissingConfig("ga.popsize must be positive");

    FitnessFn fitness(*rc.backend, rc.tracker);
    IslandModelConfig cfg;
    cfg.n_islands = opt.islands;
    cfg.generations = opt.generations;
    cfg.route = make_route(opt.route);
    cfg.seed = rc.seed;
    cfg.params = params;

    auto init = [&](Island& island) {
        std::vector<DenseVector> chroms;
        chroms.reserve(opt.popsize);
        for (std::size_t i = 0; i < opt.popsize; ++i)
            chroms.push_back(rc.box.random_point(island.rng));
        std::vector<std::size_t> ages;
        ages.reserve(opt.popsize);
        for (std::size_t i = 0; i < opt.popsize; ++i)
            ages.push_back(draw_age_limit(island.rng, opt.age_mean, opt.age_var));
        const auto values = fitness.batch(chroms);
        island.members.reserve(opt.popsize);
        for (std::size_t i = 0; i < opt.popsize; ++i)
            island.members.push_back(Individual{std::move(chroms[i]), values[i], 0, ages[i]});
    };
    auto step = [&](Island& island) { ga_generation(island, fitness, rc.box, opt); };

    return run_island_model<Individual>(cfg, *rc.budget, rc.tracker, init, step);
}

} // namespace swarmgrid::mh
