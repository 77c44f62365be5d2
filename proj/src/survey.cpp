#include "toricmld/survey.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace toricmld {

namespace {

// Quasi-reflection-free in O(n log N): a type has a quasi-reflection iff some
// axis of its induced lattice carries a lattice point below e_i, i.e. some
// axis order c_i exceeds 1. Agreement with is_well_formed is covered by tests.
bool well_formed_fast(std::int64_t n_ord, const std::vector<std::int64_t>& a) {
    std::int64_t g = n_ord;
    for (auto w : a) {
        if (w == 0) return false;
        g = std::gcd(g, w);
    }
    if (g != 1) return false;
    const std::size_t m = a.size();
    std::vector<std::int64_t> pre(m + 1, 0), suf(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) pre[i + 1] = std::gcd(pre[i], a[i]);
    for (std::size_t i = m; i-- > 0;) suf[i] = std::gcd(suf[i + 1], a[i]);
    for (std::size_t i = 0; i < m; ++i) {
        std::int64_t d = std::gcd(n_ord, std::gcd(pre[i], suf[i + 1]));
        if (d == 1) continue;
        if (((n_ord / d) * a[i]) % n_ord != 0) return false;
    }
    return true;
}

// weights are nondecreasing; canonical iff no unit rescaling sorts lower
bool is_canonical_sorted(std::int64_t n_ord, const std::vector<std::int64_t>& a) {
    std::vector<std::int64_t> cand(a.size());
    for (std::int64_t k = 2; k < n_ord; ++k) {
        if (std::gcd(k, n_ord) != 1) continue;
        for (std::size_t i = 0; i < a.size(); ++i) cand[i] = (k * a[i]) % n_ord;
        std::sort(cand.begin(), cand.end());
        if (cand < a) return false;
    }
    return true;
}

void descend(std::int64_t n_ord, std::vector<std::int64_t>& a, std::size_t pos,
             std::int64_t min_val, const std::function<void(const QuotientType&)>& yield) {
    if (pos == a.size()) {
        if (well_formed_fast(n_ord, a) && is_canonical_sorted(n_ord, a))
            yield(QuotientType(n_ord, a));
        return;
    }
    for (std::int64_t v = min_val; v < n_ord; ++v) {
        a[pos] = v;
        descend(n_ord, a, pos + 1, v, yield);
    }
}

}  // namespace

void enumerate_quotients(int dim, std::int64_t max_order,
                         const std::function<void(const QuotientType&)>& yield) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    if (max_order < 2) throw std::invalid_argument("max order must be at least 2");
    std::vector<std::int64_t> a(static_cast<std::size_t>(dim));
    for (std::int64_t n_ord = 2; n_ord <= max_order; ++n_ord)
        descend(n_ord, a, 0, 1, yield);
}

std::vector<SurveyRecord> survey(int dim, std::int64_t max_order, int threads) {
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    std::vector<QuotientType> types;
    enumerate_quotients(dim, max_order,
                        [&](const QuotientType& q) { types.push_back(q); });

    std::vector<SurveyRecord> records(types.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const QuotientType& q = types[i];
            MldResult m = mld(q);
            records[i] = SurveyRecord{dim, q.order(), q.weights(), m.mld_log(),
                                      classify(m), gorenstein_index(q)};
        }
    };
    if (threads == 1 || types.size() < 2) {
        work(0, types.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (types.size() + threads - 1) / static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            std::size_t lo = static_cast<std::size_t>(t) * chunk;
            std::size_t hi = std::min(types.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

std::vector<SpectrumEntry> spectrum_of(const std::vector<SurveyRecord>& records) {
    std::map<Rational, SpectrumEntry> agg;
    for (const auto& r : records) {
        auto it = agg.find(r.mld_log);
        if (it == agg.end())
            agg.emplace(r.mld_log,
                        SpectrumEntry{r.mld_log, 1, QuotientType(r.order, r.weights)});
        else
            ++it->second.multiplicity;
    }
    std::vector<SpectrumEntry> out;
    out.reserve(agg.size());
    for (auto& [v, e] : agg) out.push_back(std::move(e));
    return out;
}

std::vector<SpectrumEntry> spectrum(int dim, std::int64_t max_order, int threads) {
    return spectrum_of(survey(dim, max_order, threads));
}

namespace {

std::string weights_field(const std::vector<std::int64_t>& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i];
    }
    return os.str();
}

SingularityClass class_from_string(const std::string& s, int line) {
    if (s == "terminal") return SingularityClass::Terminal;
    if (s == "canonical-not-terminal") return SingularityClass::CanonicalNotTerminal;
    if (s == "klt-not-canonical") return SingularityClass::KltNotCanonical;
    throw ParseError("line " + std::to_string(line) + ": unknown class '" + s + "'");
}

std::int64_t int_field(const std::string& s, int line) {
    try {
        Integer v = parse_integer(s);
        if (!v.fits_slong_p()) throw ParseError("out of range");
        return v.get_si();
    } catch (const ParseError&) {
        throw ParseError("line " + std::to_string(line) + ": invalid integer '" + s + "'");
    }
}

constexpr const char* kCsvHeader = "dim,N,weights,mld_num,mld_den,class,index";

}  // namespace

void persist_csv(const std::vector<SurveyRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.dim << ',' << r.order << ',' << weights_field(r.weights) << ','
            << r.mld_log.get_num().get_str() << ',' << r.mld_log.get_den().get_str() << ','
            << to_string(r.cls) << ',' << r.index << '\n';
    }
}

void persist_csv(const std::vector<SurveyRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    persist_csv(records, out);
    if (!out.good()) throw std::runtime_error("write failure on '" + path + "'");
}

std::vector<SurveyRecord> load_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw ParseError("line 1: expected header '" + std::string(kCsvHeader) + "'");
    ++line_no;
    std::vector<SurveyRecord> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        for (;;) {
            auto comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != 7)
            throw ParseError("line " + std::to_string(line_no) + ": expected 7 fields");
        SurveyRecord r;
        r.dim = static_cast<int>(int_field(fields[0], line_no));
        r.order = int_field(fields[1], line_no);
        std::istringstream ws(fields[2]);
        std::string tok;
        while (ws >> tok) r.weights.push_back(int_field(tok, line_no));
        Integer num(int_field(fields[3], line_no));
        Integer den(int_field(fields[4], line_no));
        if (den <= 0)
            throw ParseError("line " + std::to_string(line_no) + ": nonpositive denominator");
        r.mld_log = Rational(num, den);
        r.mld_log.canonicalize();
        r.cls = class_from_string(fields[5], line_no);
        r.index = int_field(fields[6], line_no);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SurveyRecord> load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    return load_csv(in);
}

void persist_json(const std::vector<SurveyRecord>& records, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["dim"] = r.dim;
        j["N"] = r.order;
        j["weights"] = r.weights;
        j["mld"] = to_string(r.mld_log);
        j["class"] = to_string(r.cls);
        j["index"] = r.index;
        doc["records"].push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
}

void persist_json(const std::vector<SurveyRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    persist_json(records, out);
    if (!out.good()) throw std::runtime_error("write failure on '" + path + "'");
}

std::vector<SurveyRecord> load_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("records") || !doc["records"].is_array())
        throw ParseError("json: expected an object with a 'records' array");
    std::vector<SurveyRecord> out;
    int i = 0;
    for (const auto& j : doc["records"]) {
        ++i;
        auto ctx = [&](const std::string& m) {
            return ParseError("json record " + std::to_string(i) + ": " + m);
        };
        if (!j.is_object()) throw ctx("not an object");
        for (const char* key : {"dim", "N", "weights", "mld", "class", "index"})
            if (!j.contains(key)) throw ctx(std::string("missing '") + key + "'");
        if (!j["dim"].is_number_integer() || !j["N"].is_number_integer() ||
            !j["index"].is_number_integer())
            throw ctx("dim, N and index must be integers");
        SurveyRecord r;
        r.dim = j["dim"].get<int>();
        r.order = j["N"].get<std::int64_t>();
        if (!j["weights"].is_array()) throw ctx("weights must be an array");
        for (const auto& w : j["weights"]) {
            if (!w.is_number_integer()) throw ctx("weights must be integers");
            r.weights.push_back(w.get<std::int64_t>());
        }
        if (!j["mld"].is_string()) throw ctx("mld must be a string 'p/q'");
        try {
            r.mld_log = parse_rational(j["mld"].get<std::string>());
        } catch (const ParseError& e) {
            throw ctx(e.what());
        }
        r.cls = class_from_string(j["class"].get<std::string>(), i);
        r.index = j["index"].get<std::int64_t>();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SurveyRecord> load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    return load_json(in);
}

AccumulationReport accumulation_report(int dim, std::int64_t max_order,
                                       const std::vector<std::vector<SurveyRecord>>& lower,
                                       const Rational& delta, int threads) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    AccumulationReport rep;
    rep.dim = dim;
    rep.max_order = max_order;
    rep.delta = delta;

    auto records = survey(dim, max_order, threads);
    std::set<Rational> values;
    for (const auto& r : records) values.insert(r.mld_log);
    rep.max_mld = values.empty() ? Rational(0) : *values.rbegin();
    rep.half_bound_holds = rep.max_mld <= make_rational(dim, 2);

    std::map<Rational, std::set<std::string>> cands;
    cands[Rational(0)].insert("zero");
    for (const auto& spec : lower)
        for (const auto& r : spec)
            cands[r.mld_log].insert("dim" + std::to_string(r.dim));

    for (const auto& [v, sources] : cands) {
        AccumulationCandidate c;
        c.value = v;
        c.sources.assign(sources.begin(), sources.end());
        for (const auto& x : values) {
            if (x > v - delta && x < v) ++c.below;
            if (x > v && x <= v + delta) ++c.above;
        }
        rep.candidates.push_back(std::move(c));
    }
    return rep;
}

}  // namespace toricmld
