#pragma once

#include <string>
#include <vector>

#include "zerosum/core.hpp"

namespace zerosum {

/// Exact zero-sum k-block threshold N(r, s, k) with the quantities it is built from.
struct BoundReport {
    Params params;
    i64 t;        ///< unique t in [0, r+s) with sk/(r+s) - 1 + t = 0 mod (r+s)
    i64 t_prime;  ///< unique t' in [0, r+s) with rk/(r+s) - 1 + t' = 0 mod (r+s)
    i64 m1;
    i64 m2;
    i64 n_exact;  ///< max(k, m1, m2)
    std::vector<std::string> notes;
};

/// Smallest n that the bounded-total-weight sufficient condition guarantees.
struct SufficientBound {
    Params params;
    i64 q;
    Rational branch_minus;  ///< k*floor((q-r)/(r+s) + rsk/(r+s)^2) + sk/(r+s) + r/s
    Rational branch_plus;   ///< k*floor((q-s)/(r+s) + rsk/(r+s)^2) + rk/(r+s) + s/r
    i64 n_sufficient;
};

/// The shift t of the block construction: t in [0, r+s) with sk/(r+s) - 1 + t = 0 mod (r+s).
i64 block_shift(const Params& params);

/// N(r,s,k) for r < s. Throws PreconditionError when r >= s, gcd != 1 or (r+s) does not divide k.
BoundReport exact_block_threshold(const Params& params);

/// N(r,s,k) for any r != s, using negation symmetry N(r,s,k) = N(s,r,k) when r > s.
BoundReport exact_block_threshold_symmetric(const Params& params);

/// Unified entry point: r = s = 1 goes to pm1_block_threshold(k, 0), otherwise the symmetric form.
/// For r = s = 1 the t, t', m1, m2 fields are evaluated from the same closed forms for reference.
BoundReport block_threshold(const Params& params);

/// Zero-sum k-block threshold for {-1,1}-sequences with |total| <= q (k even).
i64 pm1_block_threshold(i64 k, i64 q);

/// Threshold for a k-block of absolute weight <= t in {-1,1}-sequences with |total| <= q.
i64 pm1_smallsum_threshold(i64 k, i64 t, i64 q);

SufficientBound sufficient_block_bound(const Params& params, i64 q);

/// (r(k+alpha) + (r+s+s*alpha)) * floor((sk/(r+s) - 1) / (r(r+s+s*alpha))); alpha must be a good shift.
i64 ap_lower_bound_value(const Params& params, i64 alpha);

}  // namespace zerosum
