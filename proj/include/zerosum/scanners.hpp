#pragma once

#include <optional>
#include <vector>

#include "zerosum/core.hpp"

namespace zerosum {

enum class ScanMode { Block, Ap, SmallSum };

const char* to_string(ScanMode mode);

/// A scanned pattern location: positions start, start+difference, ... (0-based).
struct Witness {
    i64 start;
    i64 difference;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct ScanReport {
    ScanMode mode;
    i64 k;
    i64 t;  ///< weight tolerance; 0 outside SmallSum mode
    bool found;
    std::optional<Witness> witness;
    i64 min_abs_weight;
    i64 min_weight;
    i64 max_weight;
    i64 scanned_count;
    /// Ap mode only: entry d-1 is the least |weight| over APs with difference d.
    std::vector<i64> per_difference_min_abs;
};

/// All n-k+1 contiguous windows; witness is the lowest zero-sum start.
ScanReport block_scan(const SignSeq& seq, i64 k);

/// Every k-term AP inside [0, n) with d >= 1; witness is the least (d, start) with weight 0.
ScanReport ap_scan(const SignSeq& seq, i64 k);

/// {-1,1} sequences only: first k-window with |weight| <= t (0 <= t < k, t = k mod 2).
ScanReport smallsum_block_scan(const SignSeq& seq, i64 k, i64 t);

/// Window-weight facts that make the intermediate-value argument work.
struct InterpolationVerdict {
    bool holds;              ///< all checks below passed
    bool has_negative;
    bool has_positive;
    bool has_zero;
    bool all_divisible;      ///< every window weight = 0 mod (r+s)
    i64 max_adjacent_step;   ///< max |w(B_i) - w(B_{i+1})|
    std::vector<i64> window_weights;
};

/// Requires (r+s) | k and k <= n.
InterpolationVerdict interpolation_check(const SignSeq& seq, i64 k);

}  // namespace zerosum
