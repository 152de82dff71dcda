#ifndef SWARMGRID_VECTOR_HPP
#define SWARMGRID_VECTOR_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "swarmgrid/errors.hpp"

namespace swarmgrid {

/// Fixed-length vector of finite reals. The length is set at construction and
/// never changes; components are mutable so optimizers can update positions in
/// place. Finiteness is validated on construction from external data and can
/// be re-checked with is_finite().
class DenseVector {
public:
    DenseVector() = default;

    explicit DenseVector(std::size_t dim, double fill = 0.0) : v_(dim, fill) {}

    explicit DenseVector(std::vector<double> values) : v_(std::move(values)) {
        if (!is_finite()) throw NonFiniteResult("DenseVector: non-finite component");
    }

    DenseVector(std::initializer_list<double> values) : DenseVector(std::vector<double>(values)) {}

    std::size_t dim() const { return v_.size(); }

    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }

    double at(std::size_t i) const {
        if (i >= v_.size()) throw DimensionMismatch("DenseVector index out of range");
        return v_[i];
    }

    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

    bool is_finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    double norm2() const {
        double s = 0.0;
        for (double x : v_) s += x * x;
        return std::sqrt(s);
    }

    double norm_inf() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::fabs(x));
        return m;
    }

    double dot(const DenseVector& o) const {
        require_same_dim(o);
        double s = 0.0;
        for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * o.v_[i];
        return s;
    }

    /// this += a * d
    void axpy(double a, const DenseVector& d) {
        require_same_dim(d);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += a * d.v_[i];
    }

    bool operator==(const DenseVector& o) const { return v_ == o.v_; }
    bool operator!=(const DenseVector& o) const { return v_ != o.v_; }

private:
    void require_same_dim(const DenseVector& o) const {
        if (o.dim() != dim()) throw DimensionMismatch("DenseVector dimension mismatch");
    }

    std::vector<double> v_;
};

/// Sparse vector: dimension plus strictly increasing (index, value) entries
/// with no explicit zeros. Dense/sparse conversion round-trips exactly.
class SparseVector {
public:
    explicit SparseVector(std::size_t dim) : dim_(dim) {}

    SparseVector(std::size_t dim, std::vector<std::pair<std::size_t, double>> entries)
        : dim_(dim), entries_(std::move(entries)) {
        std::size_t prev = 0;
        bool first = true;
        for (const auto& [i, v] : entries_) {
            if (i >= dim_) throw DimensionMismatch("SparseVector: index beyond dimension");
            if (!first && i <= prev) throw Error("SparseVector: indices must be strictly increasing");
            if (v == 0.0) throw Error("SparseVector: explicit zero entry");
            if (!std::isfinite(v)) throw NonFiniteResult("SparseVector: non-finite entry");
            prev = i;
            first = false;
        }
    }

    static SparseVector from_dense(const DenseVector& d) {
        SparseVector s(d.dim());
        for (std::size_t i = 0; i < d.dim(); ++i)
            if (d[i] != 0.0) s.entries_.emplace_back(i, d[i]);
        return s;
    }

    DenseVector to_dense() const {
        DenseVector d(dim_, 0.0);
        for (const auto& [i, v] : entries_) d[i] = v;
        return d;
    }

    std::size_t dim() const { return dim_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<std::pair<std::size_t, double>>& entries() const { return entries_; }

    bool operator==(const SparseVector& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }

private:
    std::size_t dim_ = 0;
    std::vector<std::pair<std::size_t, double>> entries_;
};

} // namespace swarmgrid

#endif
