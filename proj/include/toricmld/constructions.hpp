#pragma once

#include "toricmld/quotient.hpp"

namespace toricmld {

/// Appends two coordinates of weight (1, N-1), raising the minimal
/// log-discrepancy by exactly 1. Requires a well-formed singular input;
/// the +1 identity is asserted on every call.
QuotientType lift_plus_one(const QuotientType& q);

struct SequenceSpec {
    QuotientType base;               // dimension m, order q, mld eps
    std::int64_t l = 0;              // nonnegative shift
    int n = 0;                       // target dimension, n >= m + ceil(eps) + 2l
    std::vector<std::int64_t> orders;  // each N >= 2 with N = 1 (mod q)
};

struct SequenceTerm {
    std::int64_t order;
    HypercubePoint point;
    QuotientType quotient;
    Rational expected_mld;   // sum of the point's coordinates
    Rational verified_mld;   // recomputed; equals expected_mld or the call throws
};

/// For each listed order N, places the generating point at
/// (1/N) * P + (1 - 1/N) * T on the segment toward the vertex P and converts
/// it into a quotient type of order exactly N. The limit of the values is
/// eps + l, approached from above (or constant when n - m - l = eps + l).
std::vector<SequenceTerm> construct_limit_sequence(const SequenceSpec& spec);

struct FromAboveReport {
    bool all_above = true;
    bool all_equal = true;
    bool monotone_nonincreasing = true;
    bool strictly_decreasing = true;
    std::optional<Rational> last_gap;
    bool ok() const { return all_above || all_equal; }
};

FromAboveReport verify_from_above(const std::vector<Rational>& values, const Rational& limit);

}  // namespace toricmld
