#pragma once

#include <functional>
#include <iosfwd>

#include "toricmld/quotient.hpp"

namespace toricmld {

struct SurveyRecord {
    int dim = 0;
    std::int64_t order = 0;
    std::vector<std::int64_t> weights;
    Rational mld_log;
    SingularityClass cls = SingularityClass::KltNotCanonical;
    std::int64_t index = 1;

    bool operator==(const SurveyRecord&) const = default;
};

struct SpectrumEntry {
    Rational mld_log;
    std::int64_t multiplicity = 0;
    QuotientType witness;

    bool operator==(const SpectrumEntry&) const = default;
};

/// Yields every well-formed canonical-form type of the given dimension with
/// order 2..max_order, each exactly once, in (order, weights) lexicographic
/// order.
void enumerate_quotients(int dim, std::int64_t max_order,
                         const std::function<void(const QuotientType&)>& yield);

/// Full evaluation of the enumeration: one record per type, in enumeration
/// order. The mld work may be split across threads; the output does not
/// depend on the split.
std::vector<SurveyRecord> survey(int dim, std::int64_t max_order, int threads = 1);

/// Distinct mld values, ascending, with multiplicities and first witnesses.
std::vector<SpectrumEntry> spectrum_of(const std::vector<SurveyRecord>& records);
std::vector<SpectrumEntry> spectrum(int dim, std::int64_t max_order, int threads = 1);

/// CSV persistence; columns dim,N,weights,mld_num,mld_den,class,index with
/// weights space-separated. Exact and byte-deterministic.
void persist_csv(const std::vector<SurveyRecord>& records, std::ostream& out);
void persist_csv(const std::vector<SurveyRecord>& records, const std::string& path);
std::vector<SurveyRecord> load_csv(std::istream& in);
std::vector<SurveyRecord> load_csv(const std::string& path);

/// JSON persistence with the same fields; rationals rendered as "p/q".
void persist_json(const std::vector<SurveyRecord>& records, std::ostream& out);
void persist_json(const std::vector<SurveyRecord>& records, const std::string& path);
std::vector<SurveyRecord> load_json(std::istream& in);
std::vector<SurveyRecord> load_json(const std::string& path);

struct AccumulationCandidate {
    Rational value;
    std::vector<std::string> sources;  // "zero" or "dim<k>"
    std::int64_t below = 0;            // distinct spectrum values in (v - delta, v)
    std::int64_t above = 0;            // distinct spectrum values in (v, v + delta]
};

struct AccumulationReport {
    int dim = 0;
    std::int64_t max_order = 0;
    Rational delta;
    Rational max_mld;
    bool half_bound_holds = false;  // max_mld <= dim / 2
    std::vector<AccumulationCandidate> candidates;
};

/// Diagnostic neighborhood counts of the dimension-n spectrum around 0 and
/// around every lower-dimensional mld value.
AccumulationReport accumulation_report(int dim, std::int64_t max_order,
                                       const std::vector<std::vector<SurveyRecord>>& lower,
                                       const Rational& delta, int threads = 1);

}  // namespace toricmld
