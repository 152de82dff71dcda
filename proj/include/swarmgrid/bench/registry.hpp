#ifndef SWARMGRID_BENCH_REGISTRY_HPP
#define SWARMGRID_BENCH_REGISTRY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swarmgrid/function.hpp"
#include "swarmgrid/param_map.hpp"
#include "swarmgrid/vector.hpp"

namespace swarmgrid::bench {

/// Closed per-coordinate search interval.
struct Box {
    double lo;
    double hi;
    double width() const { return hi - lo; }
};

/// One registered benchmark: the function, its standard box, and (when the
/// optimum is known in closed form) minimizer/minimum metadata used for
/// certification. Metadata is dimension-parameterized because some optima
/// scale with D.
struct BenchmarkEntry {
    std::string name;
    std::shared_ptr<const ObjectiveFunction> function;
    std::function<Box(std::size_t dim)> box;
    std::size_t min_dim = 1;
    bool differentiable = true;
    std::function<DenseVector(std::size_t dim)> minimizer; // null when unknown
    std::function<double(std::size_t dim)> minimum;        // null when unknown
};

/// Entry lookup; raises UnknownFunction for unregistered names. Every entry
/// with minimizer metadata is certified at registration: the function value
/// at the minimizer matches the known minimum within 1e-9 for D in {2,10,50}.
const BenchmarkEntry& benchmark(const std::string& name);

const std::vector<std::string>& benchmark_names();

bool is_registered(const std::string& name);

double eval_benchmark(const std::string& name, const DenseVector& x,
                      const ParamMap& params = {});

Box default_box(const std::string& name, std::size_t dim);

/// Shift specification for the displaced Rosenbrock variant: value at the
/// optimum x == shift equals bias.
struct ShiftSpec {
    DenseVector shift;
    double bias = 390.0;
};

/// Deterministically drawn shift vector, uniform inside 90% of the standard
/// box, keyed by (seed, dim).
DenseVector generate_shift(std::uint64_t seed, std::size_t dim);

/// Shift used by "rosenbrock_shifted" for a given argument dimension and
/// parameter map ("fn.shift" explicit vector, else drawn from "fn.shiftseed",
/// default seed 2008). Bias comes from "fn.bias", default 390.
ShiftSpec shift_spec_for(std::size_t dim, const ParamMap& params);

double shifted_rosenbrock(const DenseVector& x, const ShiftSpec& spec);

} // namespace swarmgrid::bench

#endif
