#pragma once

#include <iosfwd>

#include "toricmld/lattice.hpp"
#include "toricmld/quotient.hpp"

namespace toricmld {

/// Full-dimensional simplicial cone: an ambient lattice plus n independent
/// rays, each a lattice point. Rays need not be primitive.
class SimplicialConeData {
public:
    SimplicialConeData(LatticeBasis lattice, RatMatrix ray_columns);

    const LatticeBasis& lattice() const { return lattice_; }
    const RatMatrix& rays() const { return rays_; }
    int dim() const { return lattice_.dim(); }

private:
    LatticeBasis lattice_;
    RatMatrix rays_;
};

/// Text format (see README): "dim n", "lattice" + n basis rows, "rays" +
/// n ray rows, entries as exact rationals. Floating point is rejected.
SimplicialConeData parse_cone(std::istream& in);
SimplicialConeData load_cone(const std::string& path);

/// Primitive generator of each ray in the ambient lattice.
std::vector<RatVec> primitive_rays(const SimplicialConeData& c);

/// The unique linear functional with value 1 on every primitive ray point.
struct QGorensteinFunctional {
    RatVec coeffs;
    Rational value(const RatVec& v) const;
};

QGorensteinFunctional functional(const SimplicialConeData& c);

/// True iff the primitive ray points indexed by support (0-based, nonempty)
/// generate the full face lattice: lattice intersected with their span.
bool is_regular_subcone(const SimplicialConeData& c, const std::vector<int>& support);

/// Minimum functional value over lattice points interior to non-regular
/// subcones, with a lattice-point witness; Smooth when the cone is regular.
MldResult mld_toric(const SimplicialConeData& c);

struct ReductionTrace {
    RatVec witness;
    std::vector<int> support;  // 1-based ray indices
    Rational cone_mld;
};

/// Coarsens the lattice on the witness's face to the span of the face's
/// primitive rays plus the witness, producing a cyclic quotient with the
/// same minimal log-discrepancy (verified on every call).
std::pair<QuotientType, ReductionTrace> reduce_to_cyclic(const SimplicialConeData& c);

/// Cone of a quotient type: standard rays e_i over Z^n + Z * (a/N).
SimplicialConeData induced_cone(const QuotientType& q);

/// Least common denominator of the functional over the lattice.
std::int64_t gorenstein_index_toric(const SimplicialConeData& c);

}  // namespace toricmld
