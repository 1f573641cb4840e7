#pragma once

#include <string>
#include <vector>

#include "zerosum/core.hpp"

namespace zerosum {

enum class ConstructionKind {
    BlockExtremal,
    BlockExtremalNegated,
    ApModK,
    ApModKProduct,
    ApModKPlus1,
    ApGoodShift,
    ApTwoP,
};

/// What the construction avoids.
enum class Claim {
    NoZeroSumBlock,       ///< every k-block has weight exactly r+s (or -(r+s) once negated)
    NoZeroSumAp,          ///< no k-term AP inside [0, n) has weight 0
    NoZeroSumResidueAp,   ///< residue function: every full d-spaced progression over Z/k is nonzero
};

const char* to_string(ConstructionKind kind);
const char* to_string(Claim claim);

struct Construction {
    ConstructionKind kind;
    Params params;
    i64 length;
    SignSeq seq;
    Claim claim;
    bool degenerate;  ///< length 0 because a floor evaluated to 0
    std::vector<std::string> notes;
};

/// b blocks of [(sk/(r+s)-1) x -r, (rk/(r+s)+1) x +s] followed by a remainder.
/// InfeasibleError when the block count or the remainder run is negative.
Construction build_block_extremal(const Params& params);

/// The block construction for (s, r, k), negated term-wise into a {-r,s}-sequence.
Construction build_block_extremal_negated(const Params& params);

/// k = 2a with a > 1 odd: period-a pattern of length (2a+2)*floor((a-1)/4).
Construction build_ap_mod_k(i64 k);

/// A residue function over Z/k: one full period, f = product of the per-factor patterns.
struct ResidueFunction {
    i64 modulus;
    std::vector<i64> factors;
    SignSeq values;  ///< f(0), ..., f(k-1) over {-1, 1}
    i64 plus_count;
    i64 minus_count;
};

/// k = 2 * a_1 * ... * a_m with 2, a_1, ..., a_m pairwise coprime and each a_i > 1.
ResidueFunction build_ap_mod_k_product(i64 k, const std::vector<i64>& factors);

/// k even: period a = k+1 pattern of length (a+3)*floor((a-3)/6).
Construction build_ap_mod_k_plus1(i64 k);

/// Period a = k+alpha pattern over {-r, s}; alpha must be a good shift.
Construction build_ap_good_shift(const Params& params, i64 alpha);

/// k = 2p for an odd prime p: length p^2 - 1.
Construction build_ap_two_p(i64 p);

}  // namespace zerosum
