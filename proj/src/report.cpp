#include "zerosum/report.hpp"

#include "zerosum/io.hpp"

namespace zerosum {

namespace {

json rational(const Rational& q) { return json{{"num", q.num()}, {"den", q.den()}}; }

json bits_string(const SignSeq& seq) {
    std::string out;
    out.reserve(seq.size());
    for (bool b : seq.selectors()) out.push_back(b ? '1' : '0');
    return out;
}

}  // namespace

json to_json(const Params& params) { return json{{"r", params.r()}, {"s", params.s()}, {"k", params.k()}}; }

json to_json(const BoundReport& rep) {
    return json{{"params", to_json(rep.params)}, {"t", rep.t},   {"tPrime", rep.t_prime}, {"m1", rep.m1},
                {"m2", rep.m2},                  {"n_exact", rep.n_exact}, {"notes", rep.notes}};
}

json to_json(const SufficientBound& bound) {
    return json{{"params", to_json(bound.params)},
                {"q", bound.q},
                {"branchMinus", rational(bound.branch_minus)},
                {"branchPlus", rational(bound.branch_plus)},
                {"n_sufficient", bound.n_sufficient}};
}

json to_json(const ScanReport& rep, bool verbose) {
    json out{{"mode", to_string(rep.mode)},
             {"k", rep.k},
             {"found", rep.found},
             {"witness", nullptr},
             {"minAbsWeight", rep.min_abs_weight},
             {"minWeight", rep.min_weight},
             {"maxWeight", rep.max_weight},
             {"scannedCount", rep.scanned_count}};
    if (rep.mode == ScanMode::SmallSum) out["t"] = rep.t;
    if (rep.witness) out["witness"] = json{{"start", rep.witness->start}, {"difference", rep.witness->difference}};
    if (verbose && rep.mode == ScanMode::Ap) {
        json per = json::array();
        for (std::size_t i = 0; i < rep.per_difference_min_abs.size(); ++i)
            per.push_back(json{{"d", static_cast<i64>(i + 1)}, {"minAbsWeight", rep.per_difference_min_abs[i]}});
        out["perDifference"] = std::move(per);
    }
    return out;
}

json to_json(const GoodShift& shift) {
    json out{{"params", to_json(shift.params)},
             {"alpha", shift.alpha},
             {"a", shift.a},
             {"primeFactorsOfA", shift.prime_factors_of_a},
             {"sAlpha",
              json{{"alpha", shift.s_alpha.alpha},
                   {"low", shift.s_alpha.low},
                   {"step", shift.s_alpha.step},
                   {"count", shift.s_alpha.count}}},
             {"good", shift.good},
             {"blockingWitness", nullptr}};
    if (shift.blocking)
        out["blockingWitness"] = json{{"prime", shift.blocking->prime}, {"weight", shift.blocking->weight}};
    return out;
}

json to_json(const ShiftSearch& search) {
    return json{{"found", search.shift.has_value()},
                {"shift", search.shift ? to_json(*search.shift) : json(nullptr)},
                {"scannedFrom", search.first_alpha},
                {"scannedTo", search.last_alpha}};
}

json to_json(const ThresholdResult& res) {
    json witnesses = json::array();
    for (const auto& w : res.witnesses) witnesses.push_back(bits_string(w));
    json lengths = json::array();
    for (const auto& l : res.per_length)
        lengths.push_back(json{{"n", l.n}, {"candidates", l.candidates}, {"avoiding", l.avoiding}});
    return json{{"params", to_json(res.params)},
                {"mode", to_string(res.mode)},
                {"q", res.q},
                {"maxAvoidingN", res.max_avoiding_n ? json(*res.max_avoiding_n) : json(nullptr)},
                {"derivedThreshold", res.derived_threshold},
                {"witnesses", std::move(witnesses)},
                {"avoidingAtMax", res.avoiding_at_max},
                {"searchCap", res.search_cap},
                {"exhaustive", res.exhaustive},
                {"degenerate", res.degenerate},
                {"estimate", res.estimate},
                {"perLength", std::move(lengths)}};
}

json to_json(const Construction& c) {
    return json{{"kind", to_string(c.kind)},
                {"params", to_json(c.params)},
                {"length", c.length},
                {"totalWeight", c.seq.total_weight()},
                {"claimedProperty", to_string(c.claim)},
                {"degenerate", c.degenerate},
                {"notes", c.notes}};
}

json to_json(const TwoKVerdict& v) {
    return json{{"k", v.k},
                {"holds", v.holds},
                {"sequencesChecked", v.sequences_checked},
                {"counterexample", v.counterexample ? bits_string(*v.counterexample) : json(nullptr)}};
}

json to_json(const RigidityVerdict& v) {
    return json{{"v", v.v},
                {"holds", v.holds},
                {"functionsChecked", v.functions_checked},
                {"survivorCount", v.survivors.size()},
                {"survivors", v.survivors}};
}

json to_json(const ResidueLemmaVerdict& v) {
    json failure = nullptr;
    if (v.failure) failure = json{{"d", v.failure->first}, {"start", v.failure->second}};
    return json{{"k", v.k},
                {"factors", v.factors},
                {"holds", v.holds},
                {"countsHold", v.counts_hold},
                {"plusCount", v.plus_count},
                {"minusCount", v.minus_count},
                {"progressionsChecked", v.progressions_checked},
                {"failure", failure}};
}

json make_report(const std::string& command, json params, json result, long long elapsed_millis) {
    return json{{"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"indexing", "0-based"},
                {"toolVersion", kToolVersion},
                {"elapsedMillis", elapsed_millis}};
}

bool integers_only(const json& doc) {
    if (doc.is_number_float()) return false;
    if (doc.is_structured()) {
        for (const auto& item : doc)
            if (!integers_only(item)) return false;
    }
    return true;
}

}  // namespace zerosum
