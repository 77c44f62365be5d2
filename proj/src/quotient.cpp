#include "toricmld/quotient.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toricmld {

namespace {

// Keeps k * a_i inside int64 during age scans.
constexpr std::int64_t kMaxOrder = std::numeric_limits<std::int32_t>::max();

std::int64_t mod_reduce(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

QuotientType::QuotientType(std::int64_t order, std::vector<std::int64_t> weights)
    : order_(order), weights_(std::move(weights)) {
    if (order_ < 1) throw std::invalid_argument("group order must be positive");
    if (order_ > kMaxOrder) throw std::invalid_argument("group order too large");
    for (auto& w : weights_) w = mod_reduce(w, order_);
}

std::string QuotientType::str() const {
    std::ostringstream os;
    os << order_ << ':';
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) os << ',';
        os << weights_[i];
    }
    return os.str();
}

QuotientType parse_quotient(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("expected 'N:a1,...,an', got '" + text + "'");
    Integer n = parse_integer(text.substr(0, colon));
    if (n < 1 || n > kMaxOrder) throw ParseError("group order out of range in '" + text + "'");
    std::vector<std::int64_t> weights;
    std::string rest = text.substr(colon + 1);
    if (rest.empty()) throw ParseError("empty weight list in '" + text + "'");
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
        Integer w = parse_integer(tok);
        if (!w.fits_slong_p()) throw ParseError("weight out of range in '" + text + "'");
        weights.push_back(w.get_si());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return QuotientType(n.get_si(), std::move(weights));
}

HypercubePoint::HypercubePoint(RatVec coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_)
        if (c < 0 || c > 1)
            throw std::invalid_argument("hypercube coordinate outside [0,1]");
}

HypercubePoint multiple(const HypercubePoint& alpha, const Integer& m) {
    RatVec out(alpha.coords().size());
    Rational mr(m);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Rational& c = alpha.coords()[i];
        out[i] = (c == 1) ? Rational(1) : frac(mr * c);
    }
    return HypercubePoint(std::move(out));
}

FaceSignature face_signature(const HypercubePoint& alpha) {
    FaceSignature s;
    for (const auto& c : alpha.coords()) {
        if (c == 0)
            ++s.zeros;
        else if (c == 1)
            ++s.ones;
        else
            ++s.interior;
    }
    return s;
}

HypercubePoint generating_point(const QuotientType& q) {
    RatVec coords(q.weights().size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = make_rational(q.weights()[i], q.order());
    return HypercubePoint(std::move(coords));
}

Rational age(const QuotientType& q, std::int64_t k) {
    if (k < 1 || k >= q.order())
        throw std::domain_error("group element index out of range");
    std::int64_t s = 0;
    for (auto a : q.weights()) s += (k * a) % q.order();
    return make_rational(s, q.order());
}

WellFormednessReport is_well_formed(const QuotientType& q) {
    WellFormednessReport rep;
    if (q.trivial()) return rep;
    const std::int64_t n_ord = q.order();
    const auto& a = q.weights();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == 0) rep.zero_weight_indices.push_back(static_cast<int>(i) + 1);
    std::int64_t g = n_ord;
    for (auto w : a) g = std::gcd(g, w);
    rep.generates_group = (g == 1);
    for (std::int64_t k = 1; k < n_ord; ++k) {
        int nonzero = 0;
        for (auto w : a)
            if ((k * w) % n_ord != 0) ++nonzero;
        if (nonzero == 1) rep.quasi_reflections.push_back(k);
    }
    return rep;
}

std::pair<QuotientType, NormalizationTrace> normalize(const QuotientType& q) {
    std::int64_t g = q.order();
    for (auto w : q.weights()) g = std::gcd(g, w);
    if (g != 1)
        throw std::domain_error("weights of " + q.str() + " do not generate Z/" +
                                std::to_string(q.order()) + "; the stated order is wrong");

    std::int64_t n_ord = q.order();
    std::vector<std::int64_t> a = q.weights();
    std::vector<int> live(a.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i) + 1;
    std::vector<std::int64_t> acc(a.size(), 1);
    NormalizationTrace trace;

    for (;;) {
        ++trace.passes;
        if (n_ord == 1) break;

        // torus factors
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != 0) continue;
            trace.dropped.push_back(live[i]);
            a.erase(a.begin() + static_cast<long>(i));
            live.erase(live.begin() + static_cast<long>(i));
        }
        if (a.empty())
            throw std::logic_error("all coordinates dropped while the order exceeds 1");

        // axis orders c_i of the primitive generators e_i / c_i
        const std::size_t m = a.size();
        std::vector<std::int64_t> pre(m + 1, 0), suf(m + 1, 0);
        for (std::size_t i = 0; i < m; ++i) pre[i + 1] = std::gcd(pre[i], a[i]);
        for (std::size_t i = m; i-- > 0;) suf[i] = std::gcd(suf[i + 1], a[i]);
        std::vector<std::int64_t> c(m, 1);
        bool any = false;
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t d = std::gcd(n_ord, std::gcd(pre[i], suf[i + 1]));
            std::int64_t t = (n_ord / d) % n_ord;
            std::int64_t gen = (t * a[i]) % n_ord;
            c[i] = gen == 0 ? 1 : n_ord / std::gcd(n_ord, gen);
            if (c[i] > 1) any = true;
        }
        if (!any) break;

        std::int64_t prod = 1;
        for (auto ci : c) prod *= ci;
        if (prod <= 0 || n_ord % prod != 0)
            throw std::logic_error("axis orders fail to divide the group order");
        std::int64_t next = n_ord / prod;
        std::int64_t step = n_ord / next;
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t x = (a[i] * c[i]) % n_ord;
            if (x % step != 0)
                throw std::logic_error("rebased weight is not integral");
            a[i] = x / step;
            acc[static_cast<std::size_t>(live[i]) - 1] *= c[i];
        }
        n_ord = next;
        if (n_ord == 1) break;
    }

    std::sort(trace.dropped.begin(), trace.dropped.end());
    for (int idx : live) trace.axis_orders.push_back(acc[static_cast<std::size_t>(idx) - 1]);

    if (n_ord == 1)
        for (auto& w : a) w = 0;
    QuotientType out(n_ord, std::move(a));
    if (!out.trivial() && !is_well_formed(out).ok())
        throw std::logic_error("normalization did not reach a well-formed type");
    return {std::move(out), std::move(trace)};
}

MldResult MldResult::singular(Rational mld_log, MldWitness witness) {
    MldResult r;
    r.smooth_ = false;
    r.mld_log_ = std::move(mld_log);
    r.witness_ = std::move(witness);
    return r;
}

const Rational& MldResult::mld_log() const {
    if (smooth_) throw std::domain_error("smooth — minimal discrepancy undefined");
    return mld_log_;
}

const MldWitness& MldResult::witness() const {
    if (smooth_) throw std::domain_error("smooth — minimal discrepancy undefined");
    return witness_;
}

MldResult mld(const QuotientType& q) {
    if (q.trivial()) return MldResult::smooth();
    if (!is_well_formed(q).ok())
        throw std::domain_error("quotient type " + q.str() +
                                " is not well-formed; normalize it first");
    const std::int64_t n_ord = q.order();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::int64_t best_k = 0;
    for (std::int64_t k = 1; k < n_ord; ++k) {
        std::int64_t s = 0;
        for (auto a : q.weights()) s += (k * a) % n_ord;
        if (s < best) {
            best = s;
            best_k = k;
        }
    }
    MldWitness w;
    w.group_index = best_k;
    return MldResult::singular(make_rational(best, n_ord), std::move(w));
}

const char* to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::Terminal: return "terminal";
        case SingularityClass::CanonicalNotTerminal: return "canonical-not-terminal";
        case SingularityClass::KltNotCanonical: return "klt-not-canonical";
    }
    return "?";
}

SingularityClass classify(const MldResult& r) {
    const Rational& e = r.mld_log();
    if (e > 1) return SingularityClass::Terminal;
    if (e == 1) return SingularityClass::CanonicalNotTerminal;
    return SingularityClass::KltNotCanonical;
}

std::int64_t gorenstein_index(const QuotientType& q) {
    if (q.trivial()) return 1;
    if (!is_well_formed(q).ok())
        throw std::domain_error("Gorenstein index requires a well-formed type");
    std::int64_t s = 0;
    for (auto w : q.weights()) s += w;
    return q.order() / std::gcd(q.order(), s);
}

QuotientType canonical_form(const QuotientType& q) {
    if (q.trivial()) return q;
    if (!is_well_formed(q).ok())
        throw std::domain_error("canonical form requires a well-formed type");
    const std::int64_t n_ord = q.order();
    std::vector<std::int64_t> best = q.weights();
    std::sort(best.begin(), best.end());
    std::vector<std::int64_t> cand(best.size());
    for (std::int64_t k = 2; k < n_ord; ++k) {
        if (std::gcd(k, n_ord) != 1) continue;
        for (std::size_t i = 0; i < cand.size(); ++i)
            cand[i] = (k * q.weights()[i]) % n_ord;
        std::sort(cand.begin(), cand.end());
        if (cand < best) best = cand;
    }
    return QuotientType(n_ord, std::move(best));
}

}  // namespace toricmld
