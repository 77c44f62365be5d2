#include "toricmld/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricmld {

namespace {

constexpr long kMaxResidues = 5'000'000;

}  // namespace

LatticeBasis::LatticeBasis(RatMatrix columns)
    : basis_(columns), inv_(1, 1), det_(0) {
    if (basis_.rows() != basis_.cols())
        throw std::invalid_argument("lattice basis must be square");
    det_ = toricmld::det(basis_);
    if (det_ == 0) throw std::invalid_argument("lattice basis is singular");
    inv_ = inverse(basis_);
}

LatticeBasis LatticeBasis::standard(int n) { return LatticeBasis(RatMatrix::identity(n)); }

RatVec LatticeBasis::coords(const RatVec& v) const {
    if (static_cast<int>(v.size()) != dim())
        throw std::invalid_argument("vector dimension mismatch");
    return inv_.apply(v);
}

bool LatticeBasis::member(const RatVec& v) const {
    RatVec x = coords(v);
    for (const auto& c : x)
        if (!is_integral(c)) return false;
    return true;
}

RatVec LatticeBasis::primitive_generator(const RatVec& v) const {
    RatVec x = coords(v);
    if (is_zero(x)) throw std::invalid_argument("primitive generator of the zero vector");
    // Minimal t > 0 with t*x integral: lcm of denominators over gcd of numerators.
    Integer den_lcm(1), num_gcd(0);
    for (const auto& c : x) {
        if (c == 0) continue;
        Integer d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        Integer nm = abs(c.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nm.get_mpz_t());
    }
    Rational t(den_lcm, num_gcd);
    t.canonicalize();
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
    return out;
}

LatticeBasis lattice_from_generators(int n, const std::vector<RatVec>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators given");
    RatMatrix g = RatMatrix::from_columns(gens);
    if (g.rows() != n) throw std::invalid_argument("generator dimension mismatch");
    Integer den;
    IntMatrix gz = to_integer_scaled(g, den);
    SmithNormalForm f = smith_normal_form(gz);
    RatMatrix uinv = inverse(to_rational(f.u));
    RatMatrix basis(n, n);
    for (int j = 0; j < n; ++j) {
        if (j >= std::min(f.s.rows(), f.s.cols()) || f.s.at(j, j) == 0)
            throw std::invalid_argument("generators do not span the ambient space");
        Rational scale(f.s.at(j, j), den);
        scale.canonicalize();
        for (int i = 0; i < n; ++i) basis.at(i, j) = uinv.at(i, j) * scale;
    }
    return LatticeBasis(basis);
}

std::vector<RatVec> enumerate_residues(const LatticeBasis& l, const LatticeBasis& p) {
    const int n = l.dim();
    if (p.dim() != n) throw std::invalid_argument("lattice dimension mismatch");
    RatMatrix a = l.basis_inverse().mul(p.basis());
    IntMatrix az(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!is_integral(a.at(i, j)))
                throw std::invalid_argument("sublattice is not contained in the lattice");
            az.at(i, j) = a.at(i, j).get_num();
        }
    SmithNormalForm f = smith_normal_form(az);
    std::vector<long> diag(n);
    long index = 1;
    for (int i = 0; i < n; ++i) {
        const Integer& d = f.s.at(i, i);
        if (d == 0) throw std::logic_error("residue enumeration: degenerate quotient");
        if (!d.fits_slong_p() || index > kMaxResidues / d.get_si())
            throw std::invalid_argument("residue enumeration too large");
        diag[i] = d.get_si();
        index *= diag[i];
    }
    RatMatrix bprime = l.basis().mul(inverse(to_rational(f.u)));

    std::vector<RatVec> out;
    out.reserve(static_cast<std::size_t>(index));
    std::vector<long> k(n, 0);
    for (;;) {
        RatVec x(n, Rational(0));
        for (int j = 0; j < n; ++j) {
            if (k[j] == 0) continue;
            for (int i = 0; i < n; ++i) x[i] += Rational(k[j]) * bprime.at(i, j);
        }
        // reduce into the half-open fundamental parallelepiped of p
        RatVec y = p.coords(x);
        for (auto& c : y) c = frac(c);
        out.push_back(p.basis().apply(y));

        int pos = n - 1;
        while (pos >= 0 && ++k[pos] == diag[pos]) {
            k[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end(), lex_less);
    if (static_cast<long>(out.size()) != index)
        throw std::logic_error("residue count does not match the lattice index");
    return out;
}

}  // namespace toricmld
