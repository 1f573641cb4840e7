#pragma once

#include <optional>
#include <vector>

#include "zerosum/core.hpp"

namespace zerosum {

/// Distinct prime factors of n >= 1 in increasing order, by trial division.
std::vector<i64> prime_factors(i64 n);
bool is_prime(i64 n);

/// A prime p and an element w of S_alpha with p | w (w = 0 is divisible by every p).
struct BlockingWitness {
    i64 prime;
    i64 weight;
};

/// Verdict on a shift alpha: good iff no prime factor of k + alpha divides an element of S_alpha.
struct GoodShift {
    Params params;
    i64 alpha;
    i64 a;  ///< k + alpha, the construction's period
    std::vector<i64> prime_factors_of_a;
    WeightRange s_alpha;
    bool good;
    std::optional<BlockingWitness> blocking;
};

/// Outcome of a search over alpha = first..last. `shift` is empty when nothing in range qualified.
struct ShiftSearch {
    std::optional<GoodShift> shift;
    i64 first_alpha;
    i64 last_alpha;
};

/// Smallest i in [0, alpha] with p | (-r*alpha + (r+s)*i), if any. Arithmetic, no enumeration.
std::optional<i64> first_divisible_index(const WeightRange& range, i64 p);

/// Decides whether alpha is a good shift. Does not require (r+s) | k; alpha = 0 is never good.
GoodShift is_good_shift(const Params& params, i64 alpha);

/// Search horizon of the prime-gap fallback: ceil(k^0.525).
i64 prime_gap_horizon(i64 k);

/// Smallest alpha in [1, ceil(k^0.525)] with k + alpha prime, k + alpha > s*alpha and
/// (r+s) not dividing alpha (the last only matters when (r+s) does not divide k).
ShiftSearch prime_shift(const Params& params);

/// Smallest good alpha >= 1. Without a horizon the search runs up to the prime shift
/// (which is good whenever it exists), or ceil(k^0.525) if there is none.
ShiftSearch min_good_shift(const Params& params, std::optional<i64> horizon = std::nullopt);

}  // namespace zerosum
