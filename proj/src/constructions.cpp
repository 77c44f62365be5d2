#include "toricmld/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace toricmld {

QuotientType lift_plus_one(const QuotientType& q) {
    if (q.trivial()) throw std::domain_error("smooth input: nothing to lift");
    if (!is_well_formed(q).ok())
        throw std::domain_error("lift requires a well-formed quotient type");
    Rational before = mld(q).mld_log();
    std::vector<std::int64_t> w = q.weights();
    w.push_back(1);
    w.push_back(q.order() - 1);
    QuotientType out(q.order(), std::move(w));
    Rational after = mld(out).mld_log();
    if (after != before + 1)
        throw std::logic_error("lift failed to raise the mld by exactly 1");
    return out;
}

namespace {

// The construction needs the generating point to attain the minimal
// log-discrepancy; rescale by the smallest minimizing unit if it does not.
QuotientType gauge_to_witness(const QuotientType& q, const Rational& eps) {
    if (age(q, 1) == eps) return q;
    const std::int64_t n_ord = q.order();
    for (std::int64_t k = 2; k < n_ord; ++k) {
        if (std::gcd(k, n_ord) != 1) continue;
        if (age(q, k) != eps) continue;
        std::vector<std::int64_t> w(q.weights().size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = (k * q.weights()[i]) % n_ord;
        return QuotientType(n_ord, std::move(w));
    }
    throw std::domain_error("base " + q.str() +
                            ": no generating element attains the minimal log-discrepancy");
}

}  // namespace

std::vector<SequenceTerm> construct_limit_sequence(const SequenceSpec& spec) {
    if (spec.base.trivial()) throw std::domain_error("base is smooth");
    if (!is_well_formed(spec.base).ok())
        throw std::domain_error("base " + spec.base.str() + " is not well-formed");
    if (spec.l < 0) throw std::invalid_argument("l must be nonnegative");

    Rational eps = mld(spec.base).mld_log();
    QuotientType base = gauge_to_witness(spec.base, eps);
    const std::int64_t q_ord = base.order();
    const std::int64_t m = base.dim();

    Integer r = ceil_int(eps);
    Integer bound = r + m + 2 * spec.l;
    if (Integer(spec.n) < bound)
        throw std::invalid_argument("dimension bound violated: n = " + std::to_string(spec.n) +
                                    " < m + r + 2l = " + bound.get_str());
    const std::int64_t zeros = spec.n - m - spec.l;

    std::vector<SequenceTerm> terms;
    terms.reserve(spec.orders.size());
    for (std::int64_t n_ord : spec.orders) {
        if (n_ord < 2)
            throw std::invalid_argument("order " + std::to_string(n_ord) +
                                        " must be at least 2");
        if ((n_ord - 1) % q_ord != 0)
            throw std::invalid_argument(std::to_string(n_ord) + " ≢ 1 (mod " +
                                        std::to_string(q_ord) + ")");

        const std::int64_t step = (n_ord - 1) / q_ord;
        RatVec coords;
        std::vector<std::int64_t> weights;
        coords.reserve(static_cast<std::size_t>(spec.n));
        weights.reserve(static_cast<std::size_t>(spec.n));
        for (auto a : base.weights()) {
            weights.push_back(step * a);
            coords.push_back(make_rational(step * a, n_ord));
        }
        for (std::int64_t i = 0; i < spec.l; ++i) {
            weights.push_back(n_ord - 1);
            coords.push_back(make_rational(n_ord - 1, n_ord));
        }
        for (std::int64_t i = 0; i < zeros; ++i) {
            weights.push_back(1);
            coords.push_back(make_rational(1, n_ord));
        }

        std::int64_t g = n_ord;
        for (auto w : weights) g = std::gcd(g, w);
        if (g != 1)
            throw std::logic_error("constructed point does not have order " +
                                   std::to_string(n_ord));

        Rational expected = sum(coords);
        QuotientType qn(n_ord, weights);
        Rational verified = is_well_formed(qn).ok() ? mld(qn).mld_log()
                                                    : mld(normalize(qn).first).mld_log();
        if (verified != expected)
            throw std::logic_error("term at N = " + std::to_string(n_ord) +
                                   " does not attain the expected mld");
        terms.push_back(SequenceTerm{n_ord, HypercubePoint(std::move(coords)), std::move(qn),
                                     std::move(expected), std::move(verified)});
    }
    return terms;
}

FromAboveReport verify_from_above(const std::vector<Rational>& values, const Rational& limit) {
    FromAboveReport rep;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > limit)) rep.all_above = false;
        if (values[i] != limit) rep.all_equal = false;
        if (i + 1 < values.size()) {
            if (values[i] < values[i + 1]) rep.monotone_nonincreasing = false;
            if (!(values[i] > values[i + 1])) rep.strictly_decreasing = false;
        }
    }
    if (!values.empty()) rep.last_gap = values.back() - limit;
    return rep;
}

}  // namespace toricmld
