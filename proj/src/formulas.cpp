#include "zerosum/formulas.hpp"

#include <algorithm>

#include "zerosum/good_shift.hpp"

namespace zerosum {

namespace {

// The smallest u in [0, p) with share - 1 + u = 0 (mod p).
i64 congruence_shift(i64 share, i64 p) { return mod_floor(1 - share, p); }

// One of the two threshold expressions. `lo`/`hi` are the letters of the block
// whose -lo run precedes the +hi run: (r, s) for M1 and (s, r) for M2.
i64 threshold_term(i64 lo, i64 hi, i64 k, i64 shift, const char* name) {
    const i64 p = lo + hi;
    const Rational base = Rational(checked::mul(checked::mul(lo, hi), k), checked::mul(p, p));
    const Rational share(checked::mul(hi, k), p);
    Rational value;
    if (shift <= lo) {
        const Rational blocks = base - Rational(checked::add(lo, checked::mul(hi, shift)), p);
        value = blocks * Rational(k) + share + Rational(shift);
    } else {
        const Rational blocks = base - Rational(checked::add(lo, checked::mul(lo, p - shift)), p);
        value = blocks * Rational(k) + share - Rational(p - shift);
    }
    return value.to_integer(name);
}

BoundReport evaluate(const Params& params) {
    const i64 r = params.r();
    const i64 s = params.s();
    const i64 k = params.k();
    const i64 p = r + s;
    BoundReport rep{
        .params = params,
        .t = congruence_shift(checked::mul(s, k) / p, p),
        .t_prime = congruence_shift(checked::mul(r, k) / p, p),
        .m1 = 0,
        .m2 = 0,
        .n_exact = 0,
        .notes = {},
    };
    rep.m1 = threshold_term(r, s, k, rep.t, "M1");
    rep.m2 = threshold_term(s, r, k, rep.t_prime, "M2");
    rep.n_exact = std::max({k, rep.m1, rep.m2});
    if (r == 1) rep.notes.emplace_back("t' > s branch of M2 is unreachable when r = 1");
    return rep;
}

}  // namespace

i64 block_shift(const Params& params) {
    params.require_divisible();
    const i64 p = params.letters().period();
    return congruence_shift(checked::mul(params.s(), params.k()) / p, p);
}

BoundReport exact_block_threshold(const Params& params) {
    if (params.r() >= params.s())
        throw PreconditionError("exact block threshold requires r < s, got " + params.str());
    params.require_divisible();
    return evaluate(params);
}

BoundReport exact_block_threshold_symmetric(const Params& params) {
    if (params.r() == params.s())
        throw PreconditionError("symmetric block threshold requires r != s, got " + params.str());
    params.require_divisible();
    if (params.r() < params.s()) return exact_block_threshold(params);
    BoundReport rep = exact_block_threshold(params.swapped());
    rep.notes.emplace_back("negation symmetry: evaluated as " + params.swapped().str());
    return rep;
}

BoundReport block_threshold(const Params& params) {
    if (!params.letters().is_pm1()) return exact_block_threshold_symmetric(params);
    if (params.k() % 2 != 0) throw PreconditionError("(r+s) must divide k: r+s = 2, k = " + std::to_string(params.k()));
    BoundReport rep = evaluate(params);
    rep.n_exact = pm1_block_threshold(params.k(), 0);
    rep.notes.clear();
    rep.notes.emplace_back("r = s = 1: N from the {-1,1} zero-sum block threshold with q = 0");
    return rep;
}

i64 pm1_block_threshold(i64 k, i64 q) {
    if (k < 2 || k % 2 != 0) throw PreconditionError("pm1 block threshold requires even k >= 2");
    if (q < 0) throw PreconditionError("q must be nonnegative");
    const i64 s01 = mod_floor(checked::add(q, (k - 2) / 2), 2);
    const i64 half = k / 2;
    const i64 value = checked::add(checked::add(checked::mul(half, half), checked::mul(q - s01, half)), s01);
    return std::max(k, value);
}

i64 pm1_smallsum_threshold(i64 k, i64 t, i64 q) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (t < 0 || t >= k) throw PreconditionError("small-sum threshold requires 0 <= t < k");
    if (mod_floor(t - k, 2) != 0) throw PreconditionError("small-sum threshold requires t = k (mod 2)");
    if (q < 0) throw PreconditionError("q must be nonnegative");
    const i64 width = t + 2;
    const i64 s = mod_floor(checked::add(q, (k - t - 2) / 2), width);
    const Rational value = Rational(checked::mul(k, k), checked::mul(2, width)) +
                           Rational(checked::mul(q - s, k), width) - Rational(t, 2) + Rational(s);
    return std::max(k, value.ceil());
}

SufficientBound sufficient_block_bound(const Params& params, i64 q) {
    params.require_divisible();
    if (q < 0) throw PreconditionError("q must be nonnegative");
    const i64 r = params.r();
    const i64 s = params.s();
    const i64 k = params.k();
    const i64 p = r + s;
    const Rational base(checked::mul(checked::mul(r, s), k), checked::mul(p, p));
    const Rational minus_branch = Rational(checked::mul(k, (Rational(q - r, p) + base).floor())) +
                                  Rational(checked::mul(s, k), p) + Rational(r, s);
    const Rational plus_branch = Rational(checked::mul(k, (Rational(q - s, p) + base).floor())) +
                                 Rational(checked::mul(r, k), p) + Rational(s, r);
    return SufficientBound{
        .params = params,
        .q = q,
        .branch_minus = minus_branch,
        .branch_plus = plus_branch,
        .n_sufficient = std::max({k, minus_branch.ceil(), plus_branch.ceil()}),
    };
}

i64 ap_lower_bound_value(const Params& params, i64 alpha) {
    params.require_divisible();
    const GoodShift shift = is_good_shift(params, alpha);
    if (!shift.good)
        throw PreconditionError("alpha = " + std::to_string(alpha) + " is not a good shift for " + params.str());
    const i64 r = params.r();
    const i64 s = params.s();
    const i64 k = params.k();
    const i64 period_weight = checked::add(r + s, checked::mul(s, alpha));
    const i64 run = checked::mul(s, k) / (r + s) - 1;
    const i64 periods = floor_div(run, checked::mul(r, period_weight));
    return checked::mul(checked::add(checked::mul(r, checked::add(k, alpha)), period_weight), periods);
}

}  // namespace zerosum
