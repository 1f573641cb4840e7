#pragma once

// Exhaustive ground truth for small parameters.
//
// exact_threshold enumerates, for every admissible length n in [k, cap], every
// placement of the -r letters whose total weight has absolute value <= q, and
// records which lengths admit a sequence avoiding a zero-sum k-block (or k-term
// AP). The search is a depth-first walk over positions that abandons a branch as
// soon as a completed window (or AP ending at the newest position) sums to 0.
// Work is sharded by a fixed-length leading-bits prefix; shard results merge in
// prefix order so the report does not depend on the thread count.

#include <cstdint>
#include <optional>
#include <vector>

#include "zerosum/core.hpp"

namespace zerosum {

enum class TargetMode { Block, Ap };

const char* to_string(TargetMode mode);

/// Window-evaluation ceiling: ZEROSUM_BUDGET if set to a positive integer, else 10^9.
std::uint64_t default_budget();

struct OracleOptions {
    unsigned threads = 0;  ///< 0 = hardware concurrency
    std::uint64_t budget = default_budget();
    std::size_t witness_limit = 16;  ///< keep the lexicographically smallest avoiding sequences
    bool prune = true;               ///< false visits every candidate (used to check counts)
    unsigned shard_bits = 0;         ///< leading positions fixed per shard; 0 = automatic
};

struct LengthStats {
    i64 n;
    std::uint64_t candidates;  ///< complete sequences reached
    std::uint64_t avoiding;
};

struct ThresholdResult {
    Params params;
    TargetMode mode;
    i64 q;
    std::optional<i64> max_avoiding_n;
    i64 derived_threshold;  ///< max(k, max_avoiding_n + 1), or k when nothing avoids
    std::vector<SignSeq> witnesses;  ///< sorted; at max_avoiding_n
    std::uint64_t avoiding_at_max;
    i64 search_cap;
    bool exhaustive;
    bool degenerate;  ///< no admissible length in [k, cap]
    std::uint64_t estimate;
    std::vector<LengthStats> per_length;
};

/// Numbers of -r letters x for which a length-n sequence has |s(n-x) - r x| <= q.
std::vector<i64> admissible_minus_counts(const Alphabet& letters, i64 n, i64 q);

/// Upper bound on window evaluations exact_threshold would perform.
std::uint64_t estimate_cost(const Params& params, TargetMode mode, i64 q, i64 cap);

/// Throws BudgetError when the estimate exceeds options.budget.
ThresholdResult exact_threshold(const Params& params, TargetMode mode, i64 q, i64 cap,
                                const OracleOptions& options = {});

struct TwoKVerdict {
    i64 k;
    bool holds;
    std::uint64_t sequences_checked;
    std::optional<SignSeq> counterexample;
};

/// Every zero-sum {-1,1}-sequence of length 2k (k even, k <= 12) has a zero-sum k-block.
TwoKVerdict verify_2k_proposition(i64 k);

struct RigidityVerdict {
    i64 v;
    bool holds;
    std::uint64_t functions_checked;
    std::vector<std::uint32_t> survivors;  ///< bit j set means f(j) = +1
};

/// Over all f: Z/2^v -> {-1,1} (2 <= v <= 4), those with every dyadic progression
/// {j, j+2^w, ...} (0 <= w < v, 2^(v-w) terms) nonzero must be constant.
RigidityVerdict verify_pow2_rigidity(i64 v);

struct ResidueLemmaVerdict {
    i64 k;
    std::vector<i64> factors;
    bool holds;
    bool counts_hold;  ///< plus_count = k/2 + 1 and minus_count = k/2 - 1
    i64 plus_count;
    i64 minus_count;
    std::uint64_t progressions_checked;
    std::optional<std::pair<i64, i64>> failure;  ///< (d, start) of a zero-sum progression
};

/// Enumerates every d | k and every full d-spaced progression over Z/k (k <= 2310).
ResidueLemmaVerdict verify_lemma_residue_properties(i64 k, const std::vector<i64>& factors);

}  // namespace zerosum
