#include "zerosum/good_shift.hpp"

#include <cmath>

namespace zerosum {

std::vector<i64> prime_factors(i64 n) {
    if (n < 1) throw PreconditionError("prime_factors requires n >= 1");
    std::vector<i64> out;
    for (i64 p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p <= n / p; ++p)
        if (n % p == 0) return false;
    return true;
}

namespace {

// Inverse of a modulo prime p, with gcd(a, p) = 1.
i64 inverse_mod(i64 a, i64 p) {
    i64 old_r = mod_floor(a, p), r = p;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod_floor(old_s, p);
}

}  // namespace

std::optional<i64> first_divisible_index(const WeightRange& range, i64 p) {
    // Solve low + step*i = 0 (mod p) for the least i >= 0.
    const i64 low = mod_floor(range.low, p);
    const i64 step = mod_floor(range.step, p);
    i64 i;
    if (step == 0) {
        if (low != 0) return std::nullopt;
        i = 0;
    } else {
        const auto prod = static_cast<__int128>(mod_floor(-low, p)) * inverse_mod(step, p);
        i = static_cast<i64>(prod % p);
    }
    if (i >= range.count) return std::nullopt;
    return i;
}

GoodShift is_good_shift(const Params& params, i64 alpha) {
    if (alpha < 0) throw PreconditionError("alpha must be nonnegative");
    const i64 a = checked::add(params.k(), alpha);
    GoodShift out{
        .params = params,
        .alpha = alpha,
        .a = a,
        .prime_factors_of_a = prime_factors(a),
        .s_alpha = weight_range(alpha, params.letters()),
        .good = true,
        .blocking = std::nullopt,
    };
    if (alpha == 0) {
        // S_0 = {0} and every integer divides 0.
        out.good = false;
        out.blocking = BlockingWitness{out.prime_factors_of_a.empty() ? 1 : out.prime_factors_of_a.front(), 0};
        return out;
    }
    for (i64 p : out.prime_factors_of_a) {
        if (auto i = first_divisible_index(out.s_alpha, p)) {
            out.good = false;
            out.blocking = BlockingWitness{p, out.s_alpha.low + *i * out.s_alpha.step};
            break;
        }
    }
    return out;
}

i64 prime_gap_horizon(i64 k) {
    if (k < 1) throw PreconditionError("k must be positive");
    auto h = static_cast<i64>(std::ceil(std::pow(static_cast<long double>(k), 0.525L)));
    return h < 1 ? 1 : h;
}

ShiftSearch prime_shift(const Params& params) {
    const i64 k = params.k();
    const i64 horizon = prime_gap_horizon(k);
    for (i64 alpha = 1; alpha <= horizon; ++alpha) {
        const i64 a = checked::add(k, alpha);
        if (a <= checked::mul(params.s(), alpha)) continue;
        // 0 is in S_alpha exactly when (r+s) | alpha. With (r+s) | k that makes k+alpha
        // composite anyway; for other k the candidate is skipped so the result stays good.
        if (alpha % params.letters().period() == 0) continue;
        if (!is_prime(a)) continue;
        GoodShift g = is_good_shift(params, alpha);
        if (!g.good)
            throw Error("prime shift alpha = " + std::to_string(alpha) + " failed the good-shift test");
        return ShiftSearch{std::move(g), 1, alpha};
    }
    return ShiftSearch{std::nullopt, 1, horizon};
}

ShiftSearch min_good_shift(const Params& params, std::optional<i64> horizon) {
    i64 limit;
    if (horizon) {
        if (*horizon < 1) throw PreconditionError("shift horizon must be >= 1");
        limit = *horizon;
    } else {
        const ShiftSearch fallback = prime_shift(params);
        limit = fallback.shift ? fallback.shift->alpha : fallback.last_alpha;
    }
    for (i64 alpha = 1; alpha <= limit; ++alpha) {
        GoodShift g = is_good_shift(params, alpha);
        if (g.good) return ShiftSearch{std::move(g), 1, alpha};
    }
    return ShiftSearch{std::nullopt, 1, limit};
}

}  // namespace zerosum
