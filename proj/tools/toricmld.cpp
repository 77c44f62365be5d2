// Command-line interface: exact minimal log-discrepancies of cyclic quotient
// and simplicial toric singularities. All numeric output is rendered as exact
// rationals "p/q"; no floating point is read or written.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "toricmld/cone.hpp"
#include "toricmld/constructions.hpp"
#include "toricmld/quotient.hpp"
#include "toricmld/survey.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace toricmld;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

json ratvec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json witness_json(const MldWitness& w) {
    json j;
    if (w.group_index) j["k"] = *w.group_index;
    if (w.point) j["point"] = ratvec_json(*w.point);
    return j;
}

json trace_json(const QuotientType& input, const QuotientType& normalized,
                const NormalizationTrace& trace) {
    json j;
    j["input"] = input.str();
    j["normalized"] = normalized.str();
    j["dropped"] = trace.dropped;
    j["axis_orders"] = trace.axis_orders;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_mld(const std::string& quotient_arg, const std::string& cone_arg) {
    if (quotient_arg.empty() == cone_arg.empty()) {
        std::cerr << "mld: give exactly one of --quotient or --cone\n";
        return kExitUsage;
    }
    json out;
    if (!quotient_arg.empty()) {
        QuotientType raw = parse_quotient(quotient_arg);
        auto [q, trace] = normalize(raw);
        out["input"] = raw.str();
        MldResult r = mld(q);
        out["smooth"] = r.is_smooth();
        if (!r.is_smooth()) {
            out["mld_log"] = to_string(r.mld_log());
            out["mld_disc"] = to_string(r.discrepancy());
            out["witness"] = witness_json(r.witness());
            out["class"] = to_string(classify(r));
            out["index"] = gorenstein_index(q);
        }
        out["normalization"] = trace_json(raw, q, trace);
    } else {
        SimplicialConeData cone = load_cone(cone_arg);
        out["input"] = cone_arg;
        MldResult r = mld_toric(cone);
        out["smooth"] = r.is_smooth();
        if (!r.is_smooth()) {
            out["mld_log"] = to_string(r.mld_log());
            out["mld_disc"] = to_string(r.discrepancy());
            out["witness"] = witness_json(r.witness());
            out["class"] = to_string(classify(r));
            out["index"] = gorenstein_index_toric(cone);
        }
    }
    emit(out);
    return kExitOk;
}

int cmd_reduce(const std::string& cone_arg) {
    SimplicialConeData cone = load_cone(cone_arg);
    auto [q, trace] = reduce_to_cyclic(cone);
    MldResult check = mld(q);
    json out;
    out["input"] = cone_arg;
    out["cone_mld_log"] = to_string(trace.cone_mld);
    out["quotient"] = q.str();
    out["mld_log"] = to_string(check.mld_log());
    out["verified"] = (check.mld_log() == trace.cone_mld);
    out["support"] = trace.support;
    out["witness"] = ratvec_json(trace.witness);
    emit(out);
    return kExitOk;
}

int cmd_lift(const std::string& quotient_arg, std::int64_t times) {
    QuotientType raw = parse_quotient(quotient_arg);
    auto [q, trace] = normalize(raw);
    if (q.trivial()) throw std::domain_error("smooth after normalization: nothing to lift");
    Rational before = mld(q).mld_log();
    QuotientType lifted = q;
    for (std::int64_t i = 0; i < times; ++i) lifted = lift_plus_one(lifted);
    Rational after = mld(lifted).mld_log();
    if (after != before + Rational(Integer(static_cast<long>(times))))
        throw std::logic_error("lift failed to raise the mld by the requested amount");
    json out;
    out["input"] = raw.str();
    out["normalized"] = q.str();
    out["times"] = times;
    out["lifted"] = lifted.str();
    out["mld_before"] = to_string(before);
    out["mld_after"] = to_string(after);
    emit(out);
    return kExitOk;
}

int cmd_sequence(const std::string& base_arg, std::int64_t l, int n,
                 const std::string& orders_arg) {
    SequenceSpec spec;
    spec.base = parse_quotient(base_arg);
    spec.l = l;
    spec.n = n;
    std::size_t pos = 0;
    while (pos <= orders_arg.size()) {
        auto comma = orders_arg.find(',', pos);
        std::string tok =
            orders_arg.substr(pos, comma == std::string::npos ? comma : comma - pos);
        Integer v = parse_integer(tok);
        if (!v.fits_slong_p()) throw ParseError("order out of range: '" + tok + "'");
        spec.orders.push_back(v.get_si());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    auto terms = construct_limit_sequence(spec);
    Rational eps = mld(spec.base).mld_log();
    Rational limit = eps + Rational(Integer(static_cast<long>(l)));
    std::vector<Rational> values;
    for (const auto& t : terms) {
        json j;
        j["order"] = t.order;
        j["quotient"] = t.quotient.str();
        j["weights"] = t.quotient.weights();
        j["point"] = ratvec_json(t.point.coords());
        j["expected_mld"] = to_string(t.expected_mld);
        j["verified_mld"] = to_string(t.verified_mld);
        std::cout << j.dump() << "\n";
        values.push_back(t.verified_mld);
    }
    FromAboveReport rep = verify_from_above(values, limit);
    json summary;
    summary["terms"] = terms.size();
    summary["limit"] = to_string(limit);
    summary["from_above"] = rep.all_above;
    summary["constant"] = rep.all_equal;
    summary["strictly_decreasing"] = rep.strictly_decreasing;
    summary["monotone_nonincreasing"] = rep.monotone_nonincreasing;
    if (rep.last_gap) summary["last_gap"] = to_string(*rep.last_gap);
    summary["ok"] = rep.ok();
    std::cout << summary.dump() << "\n";
    return kExitOk;
}

int cmd_enumerate(int dim, std::int64_t max_order, const std::string& out_path,
                  const std::string& format, int threads) {
    auto records = survey(dim, max_order, threads);
    if (format == "csv")
        persist_csv(records, out_path);
    else
        persist_json(records, out_path);
    auto entries = spectrum_of(records);
    json out;
    out["dim"] = dim;
    out["max_order"] = max_order;
    out["types"] = records.size();
    out["distinct_values"] = entries.size();
    if (!entries.empty()) {
        out["min_mld"] = to_string(entries.front().mld_log);
        out["max_mld"] = to_string(entries.back().mld_log);
    }
    out["out"] = out_path;
    emit(out);
    return kExitOk;
}

std::vector<SurveyRecord> load_spectrum_any(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return load_json(path);
    return load_csv(path);
}

int cmd_report(int dim, std::int64_t max_order, const std::string& lower_arg,
               const std::string& delta_arg, int threads) {
    std::vector<std::vector<SurveyRecord>> lower;
    std::size_t pos = 0;
    while (pos < lower_arg.size()) {
        auto comma = lower_arg.find(',', pos);
        std::string tok =
            lower_arg.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!tok.empty()) lower.push_back(load_spectrum_any(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Rational delta = parse_rational(delta_arg);
    AccumulationReport rep = accumulation_report(dim, max_order, lower, delta, threads);
    json out;
    out["dim"] = rep.dim;
    out["max_order"] = rep.max_order;
    out["delta"] = to_string(rep.delta);
    out["max_mld"] = to_string(rep.max_mld);
    out["half_bound"] = to_string(make_rational(rep.dim, 2));
    out["half_bound_holds"] = rep.half_bound_holds;
    out["candidates"] = json::array();
    for (const auto& c : rep.candidates) {
        json j;
        j["value"] = to_string(c.value);
        j["sources"] = c.sources;
        j["below"] = c.below;
        j["above"] = c.above;
        j["clean_below"] = (c.below == 0);
        out["candidates"].push_back(std::move(j));
    }
    emit(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal log-discrepancies of toric singularities"};
    app.require_subcommand(1);

    std::string quotient_arg, cone_arg;
    auto* mld_cmd = app.add_subcommand("mld", "minimal log-discrepancy of a quotient or cone");
    mld_cmd->add_option("--quotient", quotient_arg, "quotient type N:a1,...,an");
    mld_cmd->add_option("--cone", cone_arg, "cone description file");

    std::string reduce_cone;
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a cone to a cyclic quotient");
    reduce_cmd->add_option("--cone", reduce_cone, "cone description file")->required();

    std::string lift_quotient;
    std::int64_t lift_times = 1;
    auto* lift_cmd = app.add_subcommand("lift", "raise the mld by adding coordinate pairs");
    lift_cmd->add_option("--quotient", lift_quotient, "quotient type")->required();
    lift_cmd->add_option("--times", lift_times, "number of +1 lifts")
        ->check(CLI::PositiveNumber);

    std::string seq_base, seq_orders;
    std::int64_t seq_l = 0;
    int seq_n = 0;
    auto* seq_cmd = app.add_subcommand("sequence", "limit sequences of prescribed mld");
    seq_cmd->add_option("--base", seq_base, "base quotient type")->required();
    seq_cmd->add_option("--l", seq_l, "nonnegative shift l")->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("--n", seq_n, "target dimension")->required();
    seq_cmd->add_option("--orders", seq_orders, "comma-separated group orders")->required();

    int enum_dim = 0, enum_threads = 1;
    std::int64_t enum_max = 0;
    std::string enum_out, enum_format = "csv";
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive spectrum of a dimension");
    enum_cmd->add_option("--dim", enum_dim, "dimension")->required();
    enum_cmd->add_option("--max-order", enum_max, "largest group order")->required();
    enum_cmd->add_option("--out", enum_out, "output file")->required();
    enum_cmd->add_option("--format", enum_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    enum_cmd->add_option("--threads", enum_threads, "worker threads")
        ->check(CLI::PositiveNumber);

    int rep_dim = 0, rep_threads = 1;
    std::int64_t rep_max = 0;
    std::string rep_lower, rep_delta = "1/20";
    auto* rep_cmd = app.add_subcommand("report", "accumulation diagnostics");
    rep_cmd->add_option("--dim", rep_dim, "dimension")->required();
    rep_cmd->add_option("--max-order", rep_max, "largest group order")->required();
    rep_cmd->add_option("--lower", rep_lower, "comma-separated lower-dimension spectrum files");
    rep_cmd->add_option("--delta", rep_delta, "neighborhood radius p/q");
    rep_cmd->add_option("--threads", rep_threads, "worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(mld_cmd)) return cmd_mld(quotient_arg, cone_arg);
        if (app.got_subcommand(reduce_cmd)) return cmd_reduce(reduce_cone);
        if (app.got_subcommand(lift_cmd)) return cmd_lift(lift_quotient, lift_times);
        if (app.got_subcommand(seq_cmd))
            return cmd_sequence(seq_base, seq_l, seq_n, seq_orders);
        if (app.got_subcommand(enum_cmd))
            return cmd_enumerate(enum_dim, enum_max, enum_out, enum_format, enum_threads);
        if (app.got_subcommand(rep_cmd))
            return cmd_report(rep_dim, rep_max, rep_lower, rep_delta, rep_threads);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
