#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "toricmld/rational.hpp"

namespace toricmld {

/// Cyclic quotient singularity 1/N(a_1,...,a_n): the diagonal action of Z/N
/// with the given weights. Weights are reduced into [0, N) on construction.
/// N == 1 is the distinguished smooth/trivial type.
class QuotientType {
public:
    QuotientType() : order_(1) {}  // the trivial smooth type
    QuotientType(std::int64_t order, std::vector<std::int64_t> weights);

    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    int dim() const { return static_cast<int>(weights_.size()); }
    bool trivial() const { return order_ == 1; }

    /// Textual form "N:a1,a2,...,an".
    std::string str() const;

    bool operator==(const QuotientType&) const = default;

private:
    std::int64_t order_;
    std::vector<std::int64_t> weights_;
};

/// Parses the textual form "N:a1,...,an". Whitespace is forbidden.
QuotientType parse_quotient(const std::string& text);

/// Rational point of the closed unit hypercube.
class HypercubePoint {
public:
    explicit HypercubePoint(RatVec coords);
    const RatVec& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    bool operator==(const HypercubePoint&) const = default;

private:
    RatVec coords_;
};

/// m-th multiple: coordinates equal to 1 stay 1, all others map to the
/// fractional part of m times the coordinate. m may be zero or negative.
HypercubePoint multiple(const HypercubePoint& alpha, const Integer& m);

struct FaceSignature {
    int zeros = 0;
    int ones = 0;
    int interior = 0;
    bool operator==(const FaceSignature&) const = default;
};

FaceSignature face_signature(const HypercubePoint& alpha);

HypercubePoint generating_point(const QuotientType& q);

/// Sum of fractional parts {k a_i / N}; requires 1 <= k <= N-1.
Rational age(const QuotientType& q, std::int64_t k);

/// Coordinate indices below are 1-based; quasi-reflections are the group
/// element indices k whose point has exactly one nonzero coordinate.
struct WellFormednessReport {
    std::vector<int> zero_weight_indices;
    bool generates_group = true;
    std::vector<std::int64_t> quasi_reflections;

    bool ok() const {
        return zero_weight_indices.empty() && generates_group && quasi_reflections.empty();
    }
};

WellFormednessReport is_well_formed(const QuotientType& q);

struct NormalizationTrace {
    std::vector<int> dropped;                // 1-based original coordinate indices
    std::vector<std::int64_t> axis_orders;   // accumulated c_i per surviving coordinate
    int passes = 0;
};

/// Rewrites a quotient type over the primitive axis generators of its induced
/// lattice, dropping torus factors, until the result is well-formed or the
/// trivial smooth type. Requires gcd(a_1,...,a_n,N) = 1.
std::pair<QuotientType, NormalizationTrace> normalize(const QuotientType& q);

struct MldWitness {
    std::optional<std::int64_t> group_index;
    std::optional<RatVec> point;
};

class MldResult {
public:
    static MldResult smooth() { return MldResult(); }
    static MldResult singular(Rational mld_log, MldWitness witness);

    bool is_smooth() const { return smooth_; }
    const Rational& mld_log() const;
    Rational discrepancy() const { return mld_log() - 1; }
    const MldWitness& witness() const;

private:
    MldResult() : smooth_(true) {}
    bool smooth_ = false;
    Rational mld_log_;
    MldWitness witness_;
};

/// Minimal log-discrepancy of a well-formed quotient type: the minimum age
/// over the nonzero group elements, witness = smallest minimizing index.
/// The trivial type is Smooth; ill-formed input is rejected.
MldResult mld(const QuotientType& q);

enum class SingularityClass { Terminal, CanonicalNotTerminal, KltNotCanonical };

const char* to_string(SingularityClass c);

/// Terminal iff mld_log > 1, canonical iff mld_log >= 1. Throws on Smooth.
SingularityClass classify(const MldResult& r);

/// N / gcd(N, sum of weights); requires a well-formed input.
std::int64_t gorenstein_index(const QuotientType& q);

/// Lexicographically smallest sorted weight vector over all unit rescalings.
/// Deduplication key: equal canonical forms of equal order are the same
/// singularity.
QuotientType canonical_form(const QuotientType& q);

}  // namespace toricmld
