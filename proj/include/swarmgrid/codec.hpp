#ifndef SWARMGRID_CODEC_HPP
#define SWARMGRID_CODEC_HPP

#include "swarmgrid/vector.hpp"

namespace swarmgrid {

/// Bridges the representation a search algorithm manipulates (genotype) and
/// the argument an objective function evaluates (phenotype). Implementations
/// must reproduce any in-search-space argument exactly across a
/// to_genotype/to_argument round trip.
class GenotypeCodec {
public:
    virtual ~GenotypeCodec() = default;
    virtual DenseVector to_argument(const DenseVector& genotype) const = 0;
    virtual DenseVector to_genotype(const DenseVector& argument) const = 0;
};

class IdentityCodec final : public GenotypeCodec {
public:
    DenseVector to_argument(const DenseVector& genotype) const override { return genotype; }
    DenseVector to_genotype(const DenseVector& argument) const override { return argument; }
};

inline const IdentityCodec& identity_codec() {
    static const IdentityCodec codec;
    return codec;
}

} // namespace swarmgrid

#endif
