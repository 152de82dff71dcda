#ifndef SWARMGRID_MH_GA_HPP
#define SWARMGRID_MH_GA_HPP

#include "swarmgrid/mh/engine.hpp"

namespace swarmgrid::mh {

/// Recombines two parent chromosomes into one child.
using CrossoverOp =
    std::function<DenseVector(const DenseVector& p1, const DenseVector& p2, RngStream& rng)>;

/// Rewrites a single allele; applied per allele with the configured
/// mutation probability.
using MutationOp =
    std::function<double(double allele, std::size_t j, const SearchBox& box, RngStream& rng)>;

CrossoverOp one_point_crossover();
CrossoverOp uniform_crossover();

/// Gaussian jitter with per-coordinate std = sigma_fraction * box width.
MutationOp gaussian_mutation(double sigma_fraction);
/// Uniform redraw inside the box.
MutationOp reset_mutation();

struct GaOptions {
    std::size_t islands = 1;
    std::size_t popsize = 100;
    std::size_t generations = 0; // 0 = budget-driven
    double xover_prob = 0.7;
    double mut_prob = 0.1;
    double age_mean = 1e9; // effectively no aging unless configured
    double age_var = 0.0;
    std::string route = "starvation";
    CrossoverOp xover = one_point_crossover();
    MutationOp mutator = gaussian_mutation(0.05);
};

/// One island generation: the elite survives unconditionally;
/// roulette-wheel parent selection on the minimization transform
/// w_i = max_f - f_i + eps; crossover and per-allele mutation produce the
/// offspring; finally members past their age limit are removed. An island
/// emptied by aging simply waits for immigrants.
void ga_generation(Island& island, FitnessFn& fitness, const SearchBox& box,
                   const GaOptions& opt);

class GaOptimizer final : public Optimizer {
public:
    GaOptimizer() : Optimizer("ga") {}

protected:
    OptResult run(const ObjectiveFunction& f, const ParamMap& params) override;
};

} // namespace swarmgrid::mh

#endif
