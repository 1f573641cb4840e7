#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zerosum/constructions.hpp"
#include "zerosum/formulas.hpp"
#include "zerosum/good_shift.hpp"
#include "zerosum/io.hpp"
#include "zerosum/oracle.hpp"
#include "zerosum/report.hpp"
#include "zerosum/scanners.hpp"

namespace py = pybind11;
using namespace zerosum;

namespace {

// Results cross the boundary as the same dicts the JSON reports use.
py::object as_dict(const json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

SignSeq make_seq(i64 r, i64 s, const std::vector<i64>& values) { return SignSeq::from_values(Alphabet(r, s), values); }

TargetMode parse_mode(const std::string& mode) {
    if (mode == "block") return TargetMode::Block;
    if (mode == "ap") return TargetMode::Ap;
    throw PreconditionError("mode must be 'block' or 'ap'");
}

}  // namespace

PYBIND11_MODULE(_zerosum, m) {
    m.doc() = "Zero-sum blocks and arithmetic subsequences in {-r,s}-sequences";

    auto base = py::register_exception<Error>(m, "ZeroSumError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<FormulaDomainError>(m, "FormulaDomainError", base.ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());

    m.attr("__version__") = kToolVersion;

    m.def("block_threshold", [](i64 r, i64 s, i64 k) { return as_dict(to_json(block_threshold(Params(r, s, k)))); },
          py::arg("r"), py::arg("s"), py::arg("k"));
    m.def("pm1_block_threshold", &pm1_block_threshold, py::arg("k"), py::arg("q") = 0);
    m.def("pm1_smallsum_threshold", &pm1_smallsum_threshold, py::arg("k"), py::arg("t"), py::arg("q") = 0);
    m.def(
        "sufficient_block_bound",
        [](i64 r, i64 s, i64 k, i64 q) { return as_dict(to_json(sufficient_block_bound(Params(r, s, k), q))); },
        py::arg("r"), py::arg("s"), py::arg("k"), py::arg("q"));
    m.def(
        "ap_lower_bound_value", [](i64 r, i64 s, i64 k, i64 alpha) { return ap_lower_bound_value(Params(r, s, k), alpha); },
        py::arg("r"), py::arg("s"), py::arg("k"), py::arg("alpha"));

    m.def(
        "is_good_shift", [](i64 r, i64 s, i64 k, i64 alpha) { return as_dict(to_json(is_good_shift(Params(r, s, k), alpha))); },
        py::arg("r"), py::arg("s"), py::arg("k"), py::arg("alpha"));
    m.def(
        "min_good_shift",
        [](i64 r, i64 s, i64 k, std::optional<i64> horizon) {
            return as_dict(to_json(min_good_shift(Params(r, s, k), horizon)));
        },
        py::arg("r"), py::arg("s"), py::arg("k"), py::arg("horizon") = py::none());
    m.def(
        "prime_shift", [](i64 r, i64 s, i64 k) { return as_dict(to_json(prime_shift(Params(r, s, k)))); }, py::arg("r"),
        py::arg("s"), py::arg("k"));

    m.def(
        "construct",
        [](const std::string& kind, i64 r, i64 s, i64 k, std::optional<i64> alpha, i64 p) {
            Construction c = [&] {
                if (kind == "block-extremal") return build_block_extremal(Params(r, s, k));
                if (kind == "block-extremal-neg") return build_block_extremal_negated(Params(r, s, k));
                if (kind == "ap-mod-k") return build_ap_mod_k(k);
                if (kind == "ap-mod-k1") return build_ap_mod_k_plus1(k);
                if (kind == "ap-two-p") return build_ap_two_p(p);
                if (kind == "ap-good-shift") {
                    const Params params(r, s, k);
                    i64 a = alpha ? *alpha : -1;
                    if (!alpha) {
                        const ShiftSearch search = min_good_shift(params);
                        if (!search.shift) throw InfeasibleError("no good shift in range");
                        a = search.shift->alpha;
                    }
                    return build_ap_good_shift(params, a);
                }
                throw PreconditionError("unknown construction kind '" + kind + "'");
            }();
            py::dict out = as_dict(to_json(c));
            out["values"] = c.seq.values();
            return out;
        },
        py::arg("kind"), py::arg("r") = 1, py::arg("s") = 1, py::arg("k") = 0, py::arg("alpha") = py::none(),
        py::arg("p") = 0);

    m.def(
        "scan",
        [](const std::vector<i64>& values, i64 r, i64 s, i64 k, const std::string& mode, i64 t) {
            const SignSeq seq = make_seq(r, s, values);
            if (mode == "block") return as_dict(to_json(block_scan(seq, k)));
            if (mode == "ap") return as_dict(to_json(ap_scan(seq, k), true));
            if (mode == "smallsum") return as_dict(to_json(smallsum_block_scan(seq, k, t)));
            throw PreconditionError("mode must be block, ap or smallsum");
        },
        py::arg("values"), py::arg("r"), py::arg("s"), py::arg("k"), py::arg("mode") = "block", py::arg("t") = 0);
    m.def(
        "interpolation_check",
        [](const std::vector<i64>& values, i64 r, i64 s, i64 k) {
            const InterpolationVerdict v = interpolation_check(make_seq(r, s, values), k);
            py::dict out;
            out["holds"] = v.holds;
            out["all_divisible"] = v.all_divisible;
            out["max_adjacent_step"] = v.max_adjacent_step;
            out["window_weights"] = v.window_weights;
            return out;
        },
        py::arg("values"), py::arg("r"), py::arg("s"), py::arg("k"));

    m.def(
        "exact_threshold",
        [](i64 r, i64 s, i64 k, const std::string& mode, i64 q, std::optional<i64> cap, unsigned threads) {
            OracleOptions opts;
            opts.threads = threads;
            const TargetMode target = parse_mode(mode);
            std::optional<ThresholdResult> res;
            {
                py::gil_scoped_release release;
                res.emplace(exact_threshold(Params(r, s, k), target, q, cap.value_or(3 * k), opts));
            }
            return as_dict(to_json(*res));
        },
        py::arg("r"), py::arg("s"), py::arg("k"), py::arg("mode") = "block", py::arg("q") = 0,
        py::arg("cap") = py::none(), py::arg("threads") = 0);
    m.def("verify_2k_proposition", [](i64 k) { return as_dict(to_json(verify_2k_proposition(k))); }, py::arg("k"));
    m.def("verify_pow2_rigidity", [](i64 v) { return as_dict(to_json(verify_pow2_rigidity(v))); }, py::arg("v"));
    m.def(
        "verify_lemma_residue_properties",
        [](i64 k, const std::vector<i64>& factors) { return as_dict(to_json(verify_lemma_residue_properties(k, factors))); },
        py::arg("k"), py::arg("factors"));

    m.def(
        "format_sequence",
        [](const std::vector<i64>& values, i64 r, i64 s, bool bits) {
            return format_sequence(make_seq(r, s, values), bits ? BodyEncoding::Bits : BodyEncoding::Values);
        },
        py::arg("values"), py::arg("r"), py::arg("s"), py::arg("bits") = false);
    m.def(
        "parse_sequence",
        [](const std::string& text) {
            const SignSeq seq = parse_sequence(text);
            py::dict out;
            out["r"] = seq.letters().r();
            out["s"] = seq.letters().s();
            out["values"] = seq.values();
            return out;
        },
        py::arg("text"));
}
