#pragma once

#include "toricmld/matrix.hpp"
#include "toricmld/snf.hpp"

namespace toricmld {

/// Full-rank lattice in Q^n: the integer span of the columns of a rational
/// basis matrix.
class LatticeBasis {
public:
    explicit LatticeBasis(RatMatrix columns);
    static LatticeBasis standard(int n);

    int dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    const RatMatrix& basis_inverse() const { return inv_; }
    const Rational& det() const { return det_; }

    /// Coordinates of v in this basis (exact solve).
    RatVec coords(const RatVec& v) const;

    /// True iff v is an integer combination of the basis columns.
    bool member(const RatVec& v) const;

    /// The nonzero lattice point on the ray R>=0 * v closest to the origin.
    /// v must be nonzero.
    RatVec primitive_generator(const RatVec& v) const;

private:
    RatMatrix basis_;
    RatMatrix inv_;
    Rational det_;
};

/// Lattice spanned (over Z) by an arbitrary finite generating set.
/// Throws std::invalid_argument unless the generators span Q^n.
LatticeBasis lattice_from_generators(int n, const std::vector<RatVec>& gens);

/// One representative per coset of p in l, each reduced into the half-open
/// fundamental parallelepiped of p's basis, sorted lexicographically.
/// Requires p to be a finite-index sublattice of l.
std::vector<RatVec> enumerate_residues(const LatticeBasis& l, const LatticeBasis& p);

}  // namespace toricmld
