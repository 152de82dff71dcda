#ifndef SWARMGRID_FUNCTION_HPP
#define SWARMGRID_FUNCTION_HPP

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "swarmgrid/budget.hpp"
#include "swarmgrid/errors.hpp"
#include "swarmgrid/param_map.hpp"
#include "swarmgrid/vector.hpp"

namespace swarmgrid {

/// A named, pure real-valued function of a dense argument vector and a
/// parameter map. Implementations must be safely callable from many threads
/// at once and must return the same value for the same (argument, params)
/// pair every time.
class ObjectiveFunction {
public:
    virtual ~ObjectiveFunction() = default;

    const std::string& name() const { return name_; }

    /// Raw evaluation; may return a non-finite value, which evaluate() below
    /// turns into NonFiniteResult. Implementations raise DimensionMismatch
    /// for arguments of unsupported dimension.
    virtual double value(const DenseVector& x, const ParamMap& params) const = 0;

protected:
    explicit ObjectiveFunction(std::string name) : name_(std::move(name)) {}

private:
    std::string name_;
};

/// Adapter for plain callables.
class FnObjective final : public ObjectiveFunction {
public:
    using Fn = std::function<double(const DenseVector&, const ParamMap&)>;

    FnObjective(std::string name, Fn fn) : ObjectiveFunction(std::move(name)), fn_(std::move(fn)) {}

    double value(const DenseVector& x, const ParamMap& params) const override {
        return fn_(x, params);
    }

private:
    Fn fn_;
};

/// The single evaluation gate: charges exactly one budget unit (reserved
/// before the function runs, so a drained budget never triggers an
/// evaluation), validates the argument, and rejects NaN/inf results.
inline double evaluate(const ObjectiveFunction& f, const DenseVector& x, const ParamMap& params,
                       EvalBudget& budget) {
    if (!x.is_finite()) throw NonFiniteResult("evaluate: argument has non-finite component");
    budget.reserve(1);
    const double v = f.value(x, params);
    if (!std::isfinite(v))
        throw NonFiniteResult("evaluate: function '" + f.name() + "' returned non-finite value");
    return v;
}

} // namespace swarmgrid

#endif
