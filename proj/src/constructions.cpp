#include "zerosum/constructions.hpp"

#include <numeric>

#include "zerosum/formulas.hpp"
#include "zerosum/good_shift.hpp"

namespace zerosum {

const char* to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::BlockExtremal: return "block-extremal";
        case ConstructionKind::BlockExtremalNegated: return "block-extremal-neg";
        case ConstructionKind::ApModK: return "ap-mod-k";
        case ConstructionKind::ApModKProduct: return "ap-product";
        case ConstructionKind::ApModKPlus1: return "ap-mod-k1";
        case ConstructionKind::ApGoodShift: return "ap-good-shift";
        case ConstructionKind::ApTwoP: return "ap-two-p";
    }
    return "?";
}

const char* to_string(Claim claim) {
    switch (claim) {
        case Claim::NoZeroSumBlock: return "no zero-sum k-block; every k-block has weight of absolute value r+s";
        case Claim::NoZeroSumAp: return "no zero-sum k-term arithmetic progression";
        case Claim::NoZeroSumResidueAp: return "no zero-sum full d-spaced progression over Z/k for any d | k";
    }
    return "?";
}

namespace {

// Appends `count` copies of a selector bit.
void emit(std::vector<bool>& bits, i64 count, bool plus) { bits.insert(bits.end(), static_cast<std::size_t>(count), plus); }

// f(j) = minus letter iff (j mod period) < run, for j in [0, n).
std::vector<bool> periodic_pattern(i64 n, i64 period, i64 run) {
    std::vector<bool> bits(static_cast<std::size_t>(n));
    for (i64 j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = (j % period) >= run;
    return bits;
}

Construction finish(ConstructionKind kind, const Params& params, SignSeq seq, Claim claim,
                    std::vector<std::string> notes = {}) {
    if (seq.total_weight() != 0)
        throw Error(std::string(to_string(kind)) + " produced total weight " + std::to_string(seq.total_weight()));
    const auto n = static_cast<i64>(seq.size());
    if (n == 0) notes.emplace_back("degenerate-feasible: length evaluates to 0");
    return Construction{
        .kind = kind,
        .params = params,
        .length = n,
        .seq = std::move(seq),
        .claim = claim,
        .degenerate = n == 0,
        .notes = std::move(notes),
    };
}

i64 integral_count(const Rational& q, const char* name) {
    if (!q.is_integer()) throw InfeasibleError(std::string(name) + " = " + q.str() + " is not an integer");
    return q.num();
}

}  // namespace

Construction build_block_extremal(const Params& params) {
    params.require_divisible();
    const i64 r = params.r();
    const i64 s = params.s();
    const i64 k = params.k();
    const i64 p = r + s;
    const i64 minus_run = checked::mul(s, k) / p - 1;
    const i64 plus_run = checked::mul(r, k) / p + 1;
    const i64 t = block_shift(params);
    const Rational base(checked::mul(checked::mul(r, s), k), checked::mul(p, p));

    i64 blocks;
    i64 tail_minus;
    i64 tail_plus;
    if (t <= r) {
        blocks = integral_count(base - Rational(checked::add(r, checked::mul(s, t)), p), "block count b");
        tail_minus = minus_run;
        tail_plus = t;
    } else {
        blocks = integral_count(base - Rational(checked::add(r, checked::mul(r, p - t)), p), "block count b");
        tail_minus = minus_run - (p - t);
        tail_plus = 0;
    }
    if (blocks < 0) throw InfeasibleError("block count b = " + std::to_string(blocks) + " for " + params.str());
    if (tail_minus < 0)
        throw InfeasibleError("remainder run of -r has length " + std::to_string(tail_minus) + " for " +
                              params.str());

    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(checked::add(checked::mul(blocks, k), tail_minus + tail_plus)));
    for (i64 b = 0; b < blocks; ++b) {
        emit(bits, minus_run, false);
        emit(bits, plus_run, true);
    }
    emit(bits, tail_minus, false);
    emit(bits, tail_plus, true);
    return finish(ConstructionKind::BlockExtremal, params, SignSeq(params.letters(), std::move(bits)),
                  Claim::NoZeroSumBlock, {"t = " + std::to_string(t), "b = " + std::to_string(blocks)});
}

Construction build_block_extremal_negated(const Params& params) {
    Construction base = build_block_extremal(params.swapped());
    std::vector<std::string> notes = std::move(base.notes);
    notes.emplace_back("negation of the block construction for " + params.swapped().str());
    return finish(ConstructionKind::BlockExtremalNegated, params, base.seq.negated(), Claim::NoZeroSumBlock,
                  std::move(notes));
}

Construction build_ap_mod_k(i64 k) {
    if (k < 6 || k % 4 != 2) throw PreconditionError("ap-mod-k requires k = 2 (mod 4) with k = 2a, a > 1 odd");
    const i64 a = k / 2;
    const i64 n = checked::mul(2 * a + 2, (a - 1) / 4);
    return finish(ConstructionKind::ApModK, Params(1, 1, k), SignSeq(Alphabet(1, 1), periodic_pattern(n, a, (a - 1) / 2)),
                  Claim::NoZeroSumAp);
}

ResidueFunction build_ap_mod_k_product(i64 k, const std::vector<i64>& factors) {
    if (factors.empty()) throw PreconditionError("factorization must contain at least one factor");
    i64 product = 2;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const i64 a = factors[i];
        if (a <= 1) throw PreconditionError("every factor must exceed 1");
        if (a % 2 == 0) throw PreconditionError("factor " + std::to_string(a) + " is not coprime to 2");
        for (std::size_t j = 0; j < i; ++j)
            if (std::gcd(a, factors[j]) != 1)
                throw PreconditionError("factors " + std::to_string(factors[j]) + " and " + std::to_string(a) +
                                        " are not coprime");
        product = checked::mul(product, a);
    }
    if (product != k)
        throw PreconditionError("2 * product of factors = " + std::to_string(product) + " differs from k = " +
                                std::to_string(k));

    std::vector<bool> bits(static_cast<std::size_t>(k));
    i64 plus = 0;
    for (i64 j = 0; j < k; ++j) {
        bool positive = true;
        for (i64 a : factors)
            if (j % a < (a - 1) / 2) positive = !positive;
        bits[static_cast<std::size_t>(j)] = positive;
        plus += positive ? 1 : 0;
    }
    return ResidueFunction{
        .modulus = k,
        .factors = factors,
        .values = SignSeq(Alphabet(1, 1), std::move(bits)),
        .plus_count = plus,
        .minus_count = k - plus,
    };
}

Construction build_ap_mod_k_plus1(i64 k) {
    if (k < 2 || k % 2 != 0) throw PreconditionError("ap-mod-k1 requires even k >= 2");
    const i64 a = k + 1;
    const i64 n = checked::mul(a + 3, (a - 3) / 6);
    return finish(ConstructionKind::ApModKPlus1, Params(1, 1, k),
                  SignSeq(Alphabet(1, 1), periodic_pattern(n, a, (a - 3) / 2)), Claim::NoZeroSumAp,
                  {"length (a+3)*floor((a-3)/6) with a = k+1"});
}

Construction build_ap_good_shift(const Params& params, i64 alpha) {
    params.require_divisible();
    const GoodShift shift = is_good_shift(params, alpha);
    if (!shift.good)
        throw PreconditionError("alpha = " + std::to_string(alpha) + " is not a good shift for " + params.str());
    const i64 r = params.r();
    const i64 s = params.s();
    const i64 a = shift.a;
    const i64 run = checked::mul(s, params.k()) / (r + s) - 1;
    const i64 period_weight = checked::add(r + s, checked::mul(s, alpha));
    const i64 periods = run / checked::mul(r, period_weight);
    const i64 n = checked::mul(checked::add(checked::mul(r, a), period_weight), periods);
    return finish(ConstructionKind::ApGoodShift, params, SignSeq(params.letters(), periodic_pattern(n, a, run)),
                  Claim::NoZeroSumAp,
                  {"alpha = " + std::to_string(alpha), "period weight = " + std::to_string(period_weight)});
}

Construction build_ap_two_p(i64 p) {
    if (p < 3 || !is_prime(p)) throw PreconditionError("ap-two-p requires an odd prime p");
    const i64 k = 2 * p;
    const i64 n = checked::sub(checked::mul(p, p), 1);
    return finish(ConstructionKind::ApTwoP, Params(1, 1, k), SignSeq(Alphabet(1, 1), periodic_pattern(n, k, p - 1)),
                  Claim::NoZeroSumAp);
}

}  // namespace zerosum
