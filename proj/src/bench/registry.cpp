#include "swarmgrid/bench/registry.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "swarmgrid/rng.hpp"

namespace swarmgrid::bench {
namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(const DenseVector& x, std::size_t min_dim, const char* name) {
    if (x.dim() < min_dim)
        throw DimensionMismatch(std::string(name) + ": argument dimension must be >= " +
                                std::to_string(min_dim));
}

double sphere(const DenseVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * x[i];
    return s;
}

double ackley(const DenseVector& x) {
    const double a = 20.0, b = 0.2, c = 2.0 * kPi;
    const double n = static_cast<double>(x.dim());
    double sum_sq = 0.0, sum_cos = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        sum_sq += x[i] * x[i];
        sum_cos += std::cos(c * x[i]);
    }
    return -a * std::exp(-b * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + a + std::exp(1.0);
}

double rastrigin(const DenseVector& x) {
    double s = 10.0 * static_cast<double>(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        s += x[i] * x[i] - 10.0 * std::cos(2.0 * kPi * x[i]);
    return s;
}

double rosenbrock(const DenseVector& x) {
    require_dim(x, 2, "rosenbrock");
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.dim(); ++i) {
        const double t1 = x[i + 1] - x[i] * x[i];
        const double t2 = 1.0 - x[i];
        s += 100.0 * t1 * t1 + t2 * t2;
    }
    return s;
}

double dropwave(const DenseVector& x) {
    const double r2 = sphere(x);
    return -(1.0 + std::cos(12.0 * std::sqrt(r2))) / (0.5 * r2 + 2.0);
}

double schwefel(const DenseVector& x) {
    double s = 418.9829 * static_cast<double>(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        s -= x[i] * std::sin(std::sqrt(std::fabs(x[i])));
    return s;
}

double griewank(const DenseVector& x) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        sum += x[i] * x[i] / 4000.0;
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum - prod + 1.0;
}

double trid(const DenseVector& x) {
    require_dim(x, 2, "trid");
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const double t = x[i] - 1.0;
        s += t * t;
    }
    for (std::size_t i = 1; i < x.dim(); ++i) s -= x[i] * x[i - 1];
    return s;
}

double michalewicz(const DenseVector& x) {
    const double m = 10.0;
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const double k = static_cast<double>(i + 1) * x[i] * x[i] / kPi;
        s -= std::sin(x[i]) * std::pow(std::sin(k), 2.0 * m);
    }
    return s;
}

constexpr int kWeierstrassKMax = 20;

double weierstrass_term(double y) {
    double s = 0.0;
    double ak = 1.0, bk = 1.0; // 0.5^k, 3^k
    for (int k = 0; k <= kWeierstrassKMax; ++k) {
        s += ak * std::cos(2.0 * kPi * bk * y);
        ak *= 0.5;
        bk *= 3.0;
    }
    return s;
}

double weierstrass(const DenseVector& x) {
    const double offset = weierstrass_term(0.5);
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += weierstrass_term(x[i] + 0.5);
    return s - static_cast<double>(x.dim()) * offset;
}

class SimpleBenchmark final : public ObjectiveFunction {
public:
    using Fn = double (*)(const DenseVector&);
    SimpleBenchmark(std::string name, Fn fn, std::size_t min_dim)
        : ObjectiveFunction(std::move(name)), fn_(fn), min_dim_(min_dim) {}

    double value(const DenseVector& x, const ParamMap&) const override {
        require_dim(x, min_dim_, name().c_str());
        return fn_(x);
    }

private:
    Fn fn_;
    std::size_t min_dim_;
};

class ShiftedRosenbrock final : public ObjectiveFunction {
public:
    ShiftedRosenbrock() : ObjectiveFunction("rosenbrock_shifted") {}

    double value(const DenseVector& x, const ParamMap& params) const override {
        require_dim(x, 2, "rosenbrock_shifted");
        return shifted_rosenbrock(x, shift_spec_for(x.dim(), params));
    }
};

std::function<Box(std::size_t)> fixed_box(double lo, double hi) {
    return [lo, hi](std::size_t) { return Box{lo, hi}; };
}

DenseVector origin(std::size_t dim) { return DenseVector(dim, 0.0); }
DenseVector ones(std::size_t dim) { return DenseVector(dim, 1.0); }

struct Registry {
    std::map<std::string, BenchmarkEntry> entries;
    std::vector<std::string> names;

    void add(BenchmarkEntry entry) {
        names.push_back(entry.name);
        entries.emplace(entry.name, std::move(entry));
    }
};

Registry build_registry() {
    Registry r;

    auto simple = [](const char* name, SimpleBenchmark::Fn fn, std::size_t min_dim = 1) {
        return std::make_shared<SimpleBenchmark>(name, fn, min_dim);
    };

    r.add({"sphere", simple("sphere", sphere), fixed_box(-100.0, 100.0), 1, true, origin,
           [](std::size_t) { return 0.0; }});
    r.add({"ackley", simple("ackley", ackley), fixed_box(-32.768, 32.768), 1, true, origin,
           [](std::size_t) { return 0.0; }});
    r.add({"rastrigin", simple("rastrigin", rastrigin), fixed_box(-5.12, 5.12), 1, true, origin,
           [](std::size_t) { return 0.0; }});
    r.add({"rosenbrock", simple("rosenbrock", rosenbrock, 2), fixed_box(-100.0, 100.0), 2, true,
           ones, [](std::size_t) { return 0.0; }});
    r.add({"rosenbrock_shifted", std::make_shared<ShiftedRosenbrock>(), fixed_box(-100.0, 100.0),
           2, true, nullptr, nullptr});
    r.add({"dropwave", simple("dropwave", dropwave), fixed_box(-5.12, 5.12), 1, true, origin,
           [](std::size_t) { return -1.0; }});
    // The usual minimizer 420.9687... is a published decimal, not exact, so
    // schwefel carries no certified metadata; tests check |f| <= 1e-3 there.
    r.add({"schwefel", simple("schwefel", schwefel), fixed_box(-500.0, 500.0), 1, true, nullptr,
           nullptr});
    r.add({"griewank", simple("griewank", griewank), fixed_box(-600.0, 600.0), 1, true, origin,
           [](std::size_t) { return 0.0; }});
    r.add({"trid", simple("trid", trid, 2),
           [](std::size_t dim) {
               const double d2 = static_cast<double>(dim) * static_cast<double>(dim);
               return Box{-d2, d2};
           },
           2, true,
           [](std::size_t dim) {
               DenseVector m(dim);
               for (std::size_t i = 0; i < dim; ++i)
                   m[i] = static_cast<double>(i + 1) * static_cast<double>(dim - i);
               return m;
           },
           [](std::size_t dim) {
               const double d = static_cast<double>(dim);
               return -d * (d + 4.0) * (d - 1.0) / 6.0;
           }});
    // No closed-form optimum is known for michalewicz; only f >= -D holds.
    r.add({"michalewicz", simple("michalewicz", michalewicz), fixed_box(0.0, kPi), 1, true,
           nullptr, nullptr});
    r.add({"weierstrass", simple("weierstrass", weierstrass), fixed_box(-0.5, 0.5), 1, false,
           origin, [](std::size_t) { return 0.0; }});

    // Certification: metadata entries must reproduce their optimum.
    for (const auto& [name, entry] : r.entries) {
        if (!entry.minimizer || !entry.minimum) continue;
        for (std::size_t dim : {std::size_t{2}, std::size_t{10}, std::size_t{50}}) {
            if (dim < entry.min_dim) continue;
            const DenseVector m = entry.minimizer(dim);
            const double v = entry.function->value(m, ParamMap{});
            if (std::fabs(v - entry.minimum(dim)) > 1e-9)
                throw Error("benchmark registration check failed for '" + name + "' at D=" +
                            std::to_string(dim));
        }
    }
    return r;
}

const Registry& registry() {
    static const Registry r = build_registry();
    return r;
}

} // namespace

const BenchmarkEntry& benchmark(const std::string& name) {
    const auto& r = registry();
    auto it = r.entries.find(name);
    if (it == r.entries.end()) throw UnknownFunction("unknown benchmark function: " + name);
    return it->second;
}

const std::vector<std::string>& benchmark_names() { return registry().names; }

bool is_registered(const std::string& name) { return registry().entries.count(name) != 0; }

double eval_benchmark(const std::string& name, const DenseVector& x, const ParamMap& params) {
    return benchmark(name).function->value(x, params);
}

Box default_box(const std::string& name, std::size_t dim) { return benchmark(name).box(dim); }

DenseVector generate_shift(std::uint64_t seed, std::size_t dim) {
    RngStream rng(seed, dim);
    DenseVector o(dim);
    for (std::size_t i = 0; i < dim; ++i) o[i] = rng.uniform(-90.0, 90.0);
    return o;
}

ShiftSpec shift_spec_for(std::size_t dim, const ParamMap& params) {
    ShiftSpec spec;
    spec.bias = params.get_real("fn.bias", 390.0);
    if (params.has("fn.shift")) {
        spec.shift = DenseVector(params.get_vec("fn.shift"));
        if (spec.shift.dim() != dim)
            throw DimensionMismatch("fn.shift dimension does not match argument");
    } else {
        const auto seed = static_cast<std::uint64_t>(params.get_int("fn.shiftseed", 2008));
        spec.shift = generate_shift(seed, dim);
    }
    return spec;
}

double shifted_rosenbrock(const DenseVector& x, const ShiftSpec& spec) {
    if (x.dim() != spec.shift.dim())
        throw DimensionMismatch("shifted_rosenbrock: shift dimension mismatch");
    DenseVector z(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) z[i] = x[i] - spec.shift[i] + 1.0;
    return rosenbrock(z) + spec.bias;
}

} // namespace swarmgrid::bench
