#include "toricmld/cone.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace toricmld {

SimplicialConeData::SimplicialConeData(LatticeBasis lattice, RatMatrix ray_columns)
    : lattice_(std::move(lattice)), rays_(std::move(ray_columns)) {
    const int n = lattice_.dim();
    if (rays_.rows() != n || rays_.cols() != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " rays of dimension " + std::to_string(n));
    if (det(rays_) == 0)
        throw std::invalid_argument("rays span a proper subspace");
    for (int j = 0; j < n; ++j)
        if (!lattice_.member(rays_.col(j)))
            throw std::invalid_argument("ray " + std::to_string(j + 1) +
                                        " is not a lattice point");
}

namespace {

struct ConeFileReader {
    std::istream& in;
    int line_no = 0;

    bool next_tokens(std::vector<std::string>& toks) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            toks.clear();
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("cone file, line " + std::to_string(line_no) + ": " + msg);
    }
};

RatMatrix read_rows(ConeFileReader& r, int n, const char* what) {
    RatMatrix m(n, n);
    std::vector<std::string> toks;
    for (int i = 0; i < n; ++i) {
        if (!r.next_tokens(toks)) r.fail(std::string("missing ") + what + " row");
        if (static_cast<int>(toks.size()) != n)
            r.fail(std::string("expected ") + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) {
            try {
                m.at(i, j) = parse_rational(toks[j]);
            } catch (const ParseError& e) {
                r.fail(e.what());
            }
        }
    }
    return m;
}

}  // namespace

SimplicialConeData parse_cone(std::istream& in) {
    ConeFileReader r{in};
    std::vector<std::string> toks;
    if (!r.next_tokens(toks) || toks.size() != 2 || toks[0] != "dim")
        r.fail("expected 'dim <n>'");
    Integer nz;
    try {
        nz = parse_integer(toks[1]);
    } catch (const ParseError& e) {
        r.fail(e.what());
    }
    if (nz < 1 || nz > 64) r.fail("dimension out of range");
    int n = static_cast<int>(nz.get_si());

    if (!r.next_tokens(toks) || toks.size() != 1 || toks[0] != "lattice")
        r.fail("expected 'lattice'");
    RatMatrix basis_rows = read_rows(r, n, "lattice basis");

    if (!r.next_tokens(toks) || toks.size() != 1 || toks[0] != "rays")
        r.fail("expected 'rays'");
    RatMatrix ray_rows = read_rows(r, n, "ray");

    if (r.next_tokens(toks)) r.fail("unexpected trailing content");

    // Rows in the file are vectors; internally both live as columns.
    RatMatrix basis(n, n), rays(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            basis.at(j, i) = basis_rows.at(i, j);
            rays.at(j, i) = ray_rows.at(i, j);
        }
    try {
        return SimplicialConeData(LatticeBasis(std::move(basis)), std::move(rays));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("cone file: ") + e.what());
    }
}

SimplicialConeData load_cone(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cone file '" + path + "'");
    return parse_cone(in);
}

std::vector<RatVec> primitive_rays(const SimplicialConeData& c) {
    std::vector<RatVec> out;
    out.reserve(static_cast<std::size_t>(c.dim()));
    for (int j = 0; j < c.dim(); ++j)
        out.push_back(c.lattice().primitive_generator(c.rays().col(j)));
    return out;
}

Rational QGorensteinFunctional::value(const RatVec& v) const {
    if (v.size() != coeffs.size()) throw std::invalid_argument("dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += coeffs[i] * v[i];
    return s;
}

QGorensteinFunctional functional(const SimplicialConeData& c) {
    auto prim = primitive_rays(c);
    const int n = c.dim();
    // rows are the primitive ray points: solve M f = (1,...,1)
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = prim[static_cast<std::size_t>(i)][j];
    RatVec ones(n, Rational(1));
    return QGorensteinFunctional{solve_columns(m, ones)};
}

bool is_regular_subcone(const SimplicialConeData& c, const std::vector<int>& support) {
    if (support.empty()) throw std::invalid_argument("empty support");
    std::vector<int> s = support;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.front() < 0 || s.back() >= c.dim())
        throw std::invalid_argument("support index out of range");

    auto prim = primitive_rays(c);
    const int n = c.dim();
    const int k = static_cast<int>(s.size());

    RatMatrix face_basis(n, k);
    if (k == n) {
        face_basis = c.lattice().basis();
    } else {
        // face lattice = lattice ∩ span(P_i : i in s)
        RatMatrix tr(k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                tr.at(i, j) = prim[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])][j];
        // kernel of the P rows is the orthogonal complement of their span
        auto kernel = null_space(tr);
        RatMatrix normals(n - k, n);
        if (static_cast<int>(kernel.size()) != n - k)
            throw std::logic_error("unexpected complement dimension");
        for (int i = 0; i < n - k; ++i)
            for (int j = 0; j < n; ++j) normals.at(i, j) = kernel[static_cast<std::size_t>(i)][j];
        RatMatrix cut = normals.mul(c.lattice().basis());
        Integer den;
        IntMatrix cz = to_integer_scaled(cut, den);
        SmithNormalForm f = smith_normal_form(cz);
        // integer kernel of cut = last k columns of V (cut has full row rank)
        for (int i = 0; i < n - k; ++i)
            if (f.s.at(i, i) == 0) throw std::logic_error("face cut is rank deficient");
        RatMatrix vker(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) vker.at(i, j) = Rational(f.v.at(i, n - k + j));
        face_basis = c.lattice().basis().mul(vker);
    }

    // index of Z<P_i : i in s> inside the face lattice
    RatMatrix coords(k, k);
    for (int j = 0; j < k; ++j) {
        RatVec p = prim[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])];
        RatVec x = solve_columns(face_basis, p);
        for (int i = 0; i < k; ++i) {
            if (!is_integral(x[static_cast<std::size_t>(i)]))
                throw std::logic_error("primitive ray escaped the face lattice");
            coords.at(i, j) = x[static_cast<std::size_t>(i)];
        }
    }
    Rational idx = det(coords);
    return idx == 1 || idx == -1;
}

MldResult mld_toric(const SimplicialConeData& c) {
    auto prim = primitive_rays(c);
    LatticeBasis sub(RatMatrix::from_columns(prim));
    auto residues = enumerate_residues(c.lattice(), sub);
    if (residues.size() == 1) return MldResult::smooth();

    std::map<std::vector<int>, bool> regular;
    bool have_best = false;
    Rational best;
    RatVec witness;
    for (const auto& x : residues) {
        RatVec y = sub.coords(x);
        std::vector<int> support;
        for (int i = 0; i < static_cast<int>(y.size()); ++i)
            if (y[static_cast<std::size_t>(i)] != 0) support.push_back(i);
        if (support.empty()) continue;  // the zero coset
        auto it = regular.find(support);
        if (it == regular.end())
            it = regular.emplace(support, is_regular_subcone(c, support)).first;
        if (it->second) continue;  // interior of a regular subcone: not a competitor
        Rational val = sum(y);
        if (!have_best || val < best) {
            have_best = true;
            best = val;
            witness = x;  // residues come sorted, so ties keep the lex-smallest
        }
    }
    if (!have_best)
        throw std::logic_error("non-regular cone produced no competing lattice point");
    MldWitness w;
    w.point = witness;
    return MldResult::singular(best, std::move(w));
}

std::pair<QuotientType, ReductionTrace> reduce_to_cyclic(const SimplicialConeData& c) {
    MldResult r = mld_toric(c);
    if (r.is_smooth()) throw std::domain_error("smooth — minimal discrepancy undefined");

    auto prim = primitive_rays(c);
    LatticeBasis sub(RatMatrix::from_columns(prim));
    const RatVec& x = *r.witness().point;
    RatVec y = sub.coords(x);

    std::vector<int> support;
    for (int i = 0; i < static_cast<int>(y.size()); ++i)
        if (y[static_cast<std::size_t>(i)] != 0) support.push_back(i);

    Integer order(1);
    for (int i : support) {
        Integer d = y[static_cast<std::size_t>(i)].get_den();
        mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), d.get_mpz_t());
    }
    if (!order.fits_slong_p())
        throw std::domain_error("reduced group order too large");
    std::int64_t n_ord = order.get_si();

    std::vector<std::int64_t> weights;
    weights.reserve(support.size());
    for (int i : support) {
        Rational w = y[static_cast<std::size_t>(i)] * Rational(order);
        if (!is_integral(w)) throw std::logic_error("witness coordinate failed to clear");
        weights.push_back(static_cast<std::int64_t>(w.get_num().get_si()));
    }
    QuotientType out(n_ord, std::move(weights));

    if (!is_well_formed(out).ok())
        throw std::logic_error("reduction produced an ill-formed quotient type");
    MldResult check = mld(out);
    if (check.mld_log() != r.mld_log())
        throw std::logic_error("reduction changed the minimal log-discrepancy");

    ReductionTrace trace;
    trace.witness = x;
    for (int i : support) trace.support.push_back(i + 1);
    trace.cone_mld = r.mld_log();
    return {std::move(out), std::move(trace)};
}

SimplicialConeData induced_cone(const QuotientType& q) {
    const int n = q.dim();
    if (n < 1) throw std::invalid_argument("cone of a zero-dimensional type");
    std::vector<RatVec> gens;
    for (int i = 0; i < n; ++i) {
        RatVec e(static_cast<std::size_t>(n), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        gens.push_back(std::move(e));
    }
    gens.push_back(generating_point(q).coords());
    return SimplicialConeData(lattice_from_generators(n, gens), RatMatrix::identity(n));
}

std::int64_t gorenstein_index_toric(const SimplicialConeData& c) {
    auto prim = primitive_rays(c);
    LatticeBasis sub(RatMatrix::from_columns(prim));
    auto residues = enumerate_residues(c.lattice(), sub);
    QGorensteinFunctional f = functional(c);
    Integer lcd(1);
    for (const auto& x : residues) {
        Integer d = f.value(x).get_den();
        mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), d.get_mpz_t());
    }
    if (!lcd.fits_slong_p()) throw std::domain_error("Gorenstein index too large");
    return lcd.get_si();
}

}  // namespace toricmld
