#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "zerosum/io.hpp"
#include "zerosum/report.hpp"

namespace zerosum::cli {

namespace {

using Clock = std::chrono::steady_clock;

long long millis_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Status of a finished command, with the JSON result payload for --json.
struct Outcome {
    int code = kOk;
    json params = json::object();
    json result = json::object();
};

struct BoundArgs {
    i64 r = 1, s = 1, k = 0;
    std::optional<i64> q, t;
};

struct ConstructArgs {
    std::string kind;
    i64 r = 1, s = 1, k = 0;
    std::optional<i64> alpha, p;
    std::vector<i64> factors;
    std::string out_path;
    std::string format = "values";
};

struct VerifyArgs {
    std::string mode;
    i64 k = 0;
    std::optional<i64> t;
    std::string in_path;
    bool verbose = false;
};

struct OracleArgs {
    std::string target;
    i64 r = 1, s = 1, k = 0, q = 0;
    std::optional<i64> cap, v;
    std::vector<i64> factors;
    unsigned threads = 0;
    std::optional<std::uint64_t> budget;
    std::string witness_out;
};

struct ShiftArgs {
    i64 r = 1, s = 1, k = 0;
    std::optional<i64> max_alpha;
    bool prime = false;
};

struct TableArgs {
    i64 r = 1, s = 1, k_min = 0, k_max = 0;
    std::string what;
    std::string out_path;
};

Outcome cmd_bound(const BoundArgs& a, std::ostream& out) {
    Outcome o;
    o.params = json{{"r", a.r}, {"s", a.s}, {"k", a.k}};
    const Params params(a.r, a.s, a.k);
    if (a.t) {
        if (!params.letters().is_pm1()) throw PreconditionError("--t requires r = s = 1");
        const i64 q = a.q.value_or(0);
        const i64 value = pm1_smallsum_threshold(a.k, *a.t, q);
        o.params["t"] = *a.t;
        o.params["q"] = q;
        o.result = json{{"kind", "pm1-smallsum"}, {"threshold", value}};
        out << "small-sum threshold (k=" << a.k << ", t=" << *a.t << ", q=" << q << ") = " << value << '\n';
        return o;
    }
    if (a.q) {
        const SufficientBound b = sufficient_block_bound(params, *a.q);
        o.params["q"] = *a.q;
        o.result = to_json(b);
        o.result["kind"] = "sufficient";
        out << "sufficient n for |total| <= " << *a.q << ": " << b.n_sufficient << '\n';
        if (params.letters().is_pm1() && params.k() % 2 == 0) {
            const i64 pm1 = pm1_block_threshold(params.k(), *a.q);
            o.result["pm1Threshold"] = pm1;
            out << "{-1,1} zero-sum block threshold with q = " << *a.q << ": " << pm1 << '\n';
        }
        return o;
    }
    const BoundReport rep = block_threshold(params);
    o.result = to_json(rep);
    o.result["kind"] = "exact";
    out << "N = " << rep.n_exact << '\n';
    out << "t = " << rep.t << ", t' = " << rep.t_prime << ", M1 = " << rep.m1 << ", M2 = " << rep.m2 << '\n';
    for (const auto& note : rep.notes) out << "note: " << note << '\n';
    return o;
}

Outcome cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    Outcome o;
    o.params = json{{"kind", a.kind}};
    const BodyEncoding enc = a.format == "bits" ? BodyEncoding::Bits : BodyEncoding::Values;

    if (a.kind == "ap-product") {
        o.params["k"] = a.k;
        o.params["factors"] = a.factors;
        const ResidueFunction f = build_ap_mod_k_product(a.k, a.factors);
        write_sequence_file(a.out_path, f.values, enc);
        o.result = json{{"kind", a.kind},
                        {"length", f.modulus},
                        {"plusCount", f.plus_count},
                        {"minusCount", f.minus_count},
                        {"claimedProperty", to_string(Claim::NoZeroSumResidueAp)}};
        out << "length=" << f.modulus << " (one period over Z/" << f.modulus << ")\n";
        out << "claim: " << to_string(Claim::NoZeroSumResidueAp) << '\n';
        return o;
    }

    const Construction c = [&]() -> Construction {
        if (a.kind == "block-extremal" || a.kind == "block-extremal-neg" || a.kind == "ap-good-shift") {
            o.params["r"] = a.r;
            o.params["s"] = a.s;
            o.params["k"] = a.k;
            const Params params(a.r, a.s, a.k);
            if (a.kind == "block-extremal") return build_block_extremal(params);
            if (a.kind == "block-extremal-neg") return build_block_extremal_negated(params);
            i64 alpha;
            if (a.alpha) {
                alpha = *a.alpha;
            } else {
                const ShiftSearch search = min_good_shift(params);
                if (!search.shift)
                    throw InfeasibleError("no good shift found for alpha in [" + std::to_string(search.first_alpha) +
                                          ", " + std::to_string(search.last_alpha) + "]");
                alpha = search.shift->alpha;
            }
            o.params["alpha"] = alpha;
            return build_ap_good_shift(params, alpha);
        }
        if (a.kind == "ap-mod-k") {
            o.params["k"] = a.k;
            return build_ap_mod_k(a.k);
        }
        if (a.kind == "ap-mod-k1") {
            o.params["k"] = a.k;
            return build_ap_mod_k_plus1(a.k);
        }
        if (a.kind == "ap-two-p") {
            if (!a.p) throw PreconditionError("--kind ap-two-p requires --p");
            o.params["p"] = *a.p;
            return build_ap_two_p(*a.p);
        }
        throw PreconditionError("unknown construction kind '" + a.kind + "'");
    }();

    write_sequence_file(a.out_path, c.seq, enc);
    o.result = to_json(c);
    if (c.degenerate) err << "warning: degenerate construction, length 0; wrote an empty body\n";
    out << "length=" << c.length << '\n';
    out << "claim: " << to_string(c.claim) << '\n';
    return o;
}

Outcome cmd_verify(const VerifyArgs& a, std::ostream& out) {
    Outcome o;
    const SignSeq seq = read_sequence_file(a.in_path);
    o.params = json{{"mode", a.mode}, {"k", a.k}, {"r", seq.letters().r()}, {"s", seq.letters().s()},
                    {"n", static_cast<i64>(seq.size())}};
    ScanReport rep = [&] {
        if (a.mode == "block") return block_scan(seq, a.k);
        if (a.mode == "ap") return ap_scan(seq, a.k);
        o.params["t"] = a.t.value_or(0);
        return smallsum_block_scan(seq, a.k, a.t.value_or(0));
    }();
    o.result = to_json(rep, a.verbose);
    out << "positions are 0-based\n";
    out << "scanned=" << rep.scanned_count << " minAbsWeight=" << rep.min_abs_weight << " minWeight=" << rep.min_weight
        << " maxWeight=" << rep.max_weight << '\n';
    if (a.verbose && rep.mode == ScanMode::Ap) {
        for (std::size_t i = 0; i < rep.per_difference_min_abs.size(); ++i)
            out << "d=" << i + 1 << " minAbsWeight=" << rep.per_difference_min_abs[i] << '\n';
    }
    if (rep.found) {
        out << "FOUND witness start=" << rep.witness->start << " difference=" << rep.witness->difference << '\n';
        o.code = kFound;
    } else {
        out << "verified: no " << (rep.mode == ScanMode::SmallSum ? "small-sum" : "zero-sum") << " pattern\n";
    }
    return o;
}

Outcome cmd_oracle(const OracleArgs& a, std::ostream& out) {
    Outcome o;
    o.params = json{{"target", a.target}};
    if (a.target == "two-k") {
        o.params["k"] = a.k;
        const TwoKVerdict v = verify_2k_proposition(a.k);
        o.result = to_json(v);
        out << (v.holds ? "verified" : "COUNTEREXAMPLE") << ": " << v.sequences_checked
            << " zero-sum sequences of length " << 2 * a.k << '\n';
        o.code = v.holds ? kOk : kFound;
        return o;
    }
    if (a.target == "pow2") {
        if (!a.v) throw PreconditionError("--target pow2 requires --v");
        o.params["v"] = *a.v;
        const RigidityVerdict v = verify_pow2_rigidity(*a.v);
        o.result = to_json(v);
        out << (v.holds ? "verified" : "COUNTEREXAMPLE") << ": " << v.survivors.size() << " of " << v.functions_checked
            << " functions survive\n";
        o.code = v.holds ? kOk : kFound;
        return o;
    }
    if (a.target == "residue-lemma") {
        o.params["k"] = a.k;
        o.params["factors"] = a.factors;
        const ResidueLemmaVerdict v = verify_lemma_residue_properties(a.k, a.factors);
        o.result = to_json(v);
        out << (v.holds ? "verified" : "COUNTEREXAMPLE") << ": " << v.progressions_checked << " progressions, "
            << v.plus_count << " plus / " << v.minus_count << " minus\n";
        o.code = v.holds ? kOk : kFound;
        return o;
    }
    if (a.target != "block-threshold" && a.target != "ap-threshold")
        throw PreconditionError("unknown oracle target '" + a.target + "'");

    const Params params(a.r, a.s, a.k);
    const TargetMode mode = a.target == "block-threshold" ? TargetMode::Block : TargetMode::Ap;
    const i64 cap = a.cap.value_or(3 * a.k);
    o.params.update(json{{"r", a.r}, {"s", a.s}, {"k", a.k}, {"q", a.q}, {"cap", cap}});
    OracleOptions opts;
    opts.threads = a.threads;
    if (a.budget) opts.budget = *a.budget;
    const ThresholdResult res = exact_threshold(params, mode, a.q, cap, opts);
    o.result = to_json(res);

    if (res.degenerate) out << "no admissible length in [" << a.k << ", " << cap << "]\n";
    out << "derivedThreshold = " << res.derived_threshold << '\n';
    if (res.max_avoiding_n)
        out << "maxAvoidingN = " << *res.max_avoiding_n << " (" << res.avoiding_at_max << " avoiding sequences)\n";
    else
        out << "no avoiding sequence up to cap " << cap << '\n';
    if (mode == TargetMode::Block && a.q == 0 && params.k_divisible() &&
        (params.letters().is_pm1() || params.r() != params.s())) {
        const i64 formula = block_threshold(params).n_exact;
        o.result["formulaN"] = formula;
        o.result["agreesWithFormula"] = formula == res.derived_threshold;
        out << "formula N = " << formula << (formula == res.derived_threshold ? " (agrees)" : " (DIFFERS)") << '\n';
    }
    if (!a.witness_out.empty() && !res.witnesses.empty()) write_sequence_file(a.witness_out, res.witnesses.front());
    return o;
}

Outcome cmd_shift(const ShiftArgs& a, std::ostream& out) {
    Outcome o;
    o.params = json{{"r", a.r}, {"s", a.s}, {"k", a.k}};
    const Params params(a.r, a.s, a.k);
    const ShiftSearch search = a.prime ? prime_shift(params) : min_good_shift(params, a.max_alpha);
    o.result = to_json(search);
    o.result["kind"] = a.prime ? "prime" : "minimum";
    if (!search.shift) {
        out << "no " << (a.prime ? "prime" : "good") << " shift for alpha in [" << search.first_alpha << ", "
            << search.last_alpha << "]\n";
        o.code = kFound;
        return o;
    }
    const GoodShift& g = *search.shift;
    out << "alpha=" << g.alpha << " (k+alpha = " << g.a << ")\n";
    return o;
}

Outcome cmd_table(const TableArgs& a, std::ostream& out) {
    Outcome o;
    o.params = json{{"r", a.r}, {"s", a.s}, {"kMin", a.k_min}, {"kMax", a.k_max}, {"what", a.what}};
    if (a.what != "N" && a.what != "shift" && a.what != "ap-lb")
        throw PreconditionError("--what must be one of N, shift, ap-lb");
    if (a.k_min < 1 || a.k_max < a.k_min) throw PreconditionError("need 1 <= k-min <= k-max");
    const Alphabet letters(a.r, a.s);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!a.out_path.empty() && a.out_path != "-") {
        file.open(a.out_path, std::ios::binary);
        if (!file) throw InputError("cannot write " + a.out_path);
        sink = &file;
    }
    *sink << "k,value\n";
    i64 rows = 0;
    for (i64 k = a.k_min; k <= a.k_max; ++k) {
        if (k % letters.period() != 0) continue;
        const Params params(letters, k);
        i64 value;
        if (a.what == "N") {
            value = block_threshold(params).n_exact;
        } else {
            const ShiftSearch search = min_good_shift(params);
            if (!search.shift) {
                out << "no good shift for k=" << k << " in alpha [" << search.first_alpha << ", " << search.last_alpha
                    << "]\n";
                o.code = kFound;
                return o;
            }
            value = a.what == "shift" ? search.shift->alpha : ap_lower_bound_value(params, search.shift->alpha);
        }
        *sink << k << ',' << value << '\n';
        ++rows;
    }
    o.result = json{{"rows", rows}, {"out", a.out_path.empty() ? "-" : a.out_path}};
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero-sum blocks and arithmetic subsequences in {-r,s}-sequences", "zerosum"};
    app.require_subcommand(1);
    bool as_json = false;

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Evaluate a closed-form threshold");
    bound_cmd->add_option("--r", bound.r, "negative letter magnitude")->default_val(1);
    bound_cmd->add_option("--s", bound.s, "positive letter")->default_val(1);
    bound_cmd->add_option("--k", bound.k, "subsequence length")->required();
    bound_cmd->add_option("--q", bound.q, "bound on |total weight| (sufficient bound)");
    bound_cmd->add_option("--t", bound.t, "small-sum tolerance ({-1,1} only)");
    bound_cmd->add_flag("--json", as_json);

    ConstructArgs cons;
    auto* cons_cmd = app.add_subcommand("construct", "Write an extremal construction to a sequence file");
    cons_cmd->add_option("--kind", cons.kind)
        ->required()
        ->check(CLI::IsMember({"block-extremal", "block-extremal-neg", "ap-mod-k", "ap-product", "ap-mod-k1",
                               "ap-good-shift", "ap-two-p"}));
    cons_cmd->add_option("--r", cons.r)->default_val(1);
    cons_cmd->add_option("--s", cons.s)->default_val(1);
    cons_cmd->add_option("--k", cons.k);
    cons_cmd->add_option("--alpha", cons.alpha);
    cons_cmd->add_option("--factors", cons.factors, "odd pairwise coprime factors, k = 2*product")->delimiter(',');
    cons_cmd->add_option("--p", cons.p);
    cons_cmd->add_option("--out", cons.out_path)->required();
    cons_cmd->add_option("--format", cons.format)->check(CLI::IsMember({"values", "bits"}))->default_val("values");
    cons_cmd->add_flag("--json", as_json);

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Scan a sequence file; exit 0 iff no zero-sum pattern exists");
    ver_cmd->add_option("--mode", ver.mode)->required()->check(CLI::IsMember({"block", "ap", "smallsum"}));
    ver_cmd->add_option("--k", ver.k)->required();
    ver_cmd->add_option("--t", ver.t);
    ver_cmd->add_option("--in", ver.in_path)->required();
    ver_cmd->add_flag("--verbose", ver.verbose, "per-difference minima in ap mode");
    ver_cmd->add_flag("--json", as_json);

    OracleArgs orc;
    auto* orc_cmd = app.add_subcommand("oracle", "Exhaustive enumeration");
    orc_cmd->add_option("--target", orc.target)
        ->required()
        ->check(CLI::IsMember({"block-threshold", "ap-threshold", "two-k", "pow2", "residue-lemma"}));
    orc_cmd->add_option("--r", orc.r)->default_val(1);
    orc_cmd->add_option("--s", orc.s)->default_val(1);
    orc_cmd->add_option("--k", orc.k);
    orc_cmd->add_option("--q", orc.q)->default_val(0);
    orc_cmd->add_option("--cap", orc.cap, "largest length enumerated (default 3k)");
    orc_cmd->add_option("--v", orc.v);
    orc_cmd->add_option("--factors", orc.factors)->delimiter(',');
    orc_cmd->add_option("--threads", orc.threads, "0 = all cores")->default_val(0);
    orc_cmd->add_option("--budget", orc.budget, "window-evaluation ceiling (default ZEROSUM_BUDGET or 1e9)");
    orc_cmd->add_option("--witness-out", orc.witness_out, "write the first avoiding sequence here");
    orc_cmd->add_flag("--json", as_json);

    ShiftArgs sh;
    auto* sh_cmd = app.add_subcommand("shift", "Minimum good shift (or prime shift)");
    sh_cmd->add_option("--r", sh.r)->default_val(1);
    sh_cmd->add_option("--s", sh.s)->default_val(1);
    sh_cmd->add_option("--k", sh.k)->required();
    sh_cmd->add_option("--max-alpha", sh.max_alpha);
    sh_cmd->add_flag("--prime", sh.prime);
    sh_cmd->add_flag("--json", as_json);

    TableArgs tab;
    auto* tab_cmd = app.add_subcommand("table", "CSV of N, minimum shift or AP lower bound over a k range");
    tab_cmd->add_option("--r", tab.r)->default_val(1);
    tab_cmd->add_option("--s", tab.s)->default_val(1);
    tab_cmd->add_option("--k-min", tab.k_min)->required();
    tab_cmd->add_option("--k-max", tab.k_max)->required();
    tab_cmd->add_option("--what", tab.what)->required()->check(CLI::IsMember({"N", "shift", "ap-lb"}));
    tab_cmd->add_option("--out", tab.out_path, "CSV path, - for stdout");
    tab_cmd->add_flag("--json", as_json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const auto start = Clock::now();
    std::string command;
    try {
        Outcome o;
        // Text goes to a buffer so that --json can replace it.
        std::ostringstream text;
        if (bound_cmd->parsed()) {
            command = "bound";
            o = cmd_bound(bound, text);
        } else if (cons_cmd->parsed()) {
            command = "construct";
            o = cmd_construct(cons, text, err);
        } else if (ver_cmd->parsed()) {
            command = "verify";
            o = cmd_verify(ver, text);
        } else if (orc_cmd->parsed()) {
            command = "oracle";
            o = cmd_oracle(orc, text);
        } else if (sh_cmd->parsed()) {
            command = "shift";
            o = cmd_shift(sh, text);
        } else {
            command = "table";
            o = cmd_table(tab, text);
        }
        if (as_json)
            out << make_report(command, o.params, o.result, millis_since(start)).dump(2) << '\n';
        else
            out << text.str();
        return o.code;
    } catch (const BudgetError& e) {
        err << "refused: " << e.what() << " (estimate " << e.estimate() << ", ceiling " << e.ceiling() << ")\n";
        return kUsage;
    } catch (const Error& e) {
        err << command << ": " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace zerosum::cli
