#include "zerosum/scanners.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace zerosum {

const char* to_string(ScanMode mode) {
    switch (mode) {
        case ScanMode::Block: return "block";
        case ScanMode::Ap: return "ap";
        case ScanMode::SmallSum: return "smallsum";
    }
    return "?";
}

namespace {

void require_window(const SignSeq& seq, i64 k) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (static_cast<std::size_t>(k) > seq.size())
        throw PreconditionError("k = " + std::to_string(k) + " exceeds sequence length " +
                                std::to_string(seq.size()));
}

ScanReport empty_report(ScanMode mode, i64 k, i64 t) {
    return ScanReport{
        .mode = mode,
        .k = k,
        .t = t,
        .found = false,
        .witness = std::nullopt,
        .min_abs_weight = std::numeric_limits<i64>::max(),
        .min_weight = std::numeric_limits<i64>::max(),
        .max_weight = std::numeric_limits<i64>::min(),
        .scanned_count = 0,
        .per_difference_min_abs = {},
    };
}

// Accumulates one window weight into the report. Returns |w|.
inline i64 record(ScanReport& rep, i64 w) {
    const i64 a = std::abs(w);
    rep.min_abs_weight = std::min(rep.min_abs_weight, a);
    rep.min_weight = std::min(rep.min_weight, w);
    rep.max_weight = std::max(rep.max_weight, w);
    ++rep.scanned_count;
    return a;
}

void check_residue(const SignSeq& seq, i64 k, i64 w) {
    const i64 p = seq.letters().period();
    if (k % p == 0 && w % p != 0)
        throw Error("window weight " + std::to_string(w) + " is not divisible by r+s = " + std::to_string(p));
}

ScanReport window_scan(const SignSeq& seq, i64 k, i64 t, ScanMode mode) {
    require_window(seq, k);
    ScanReport rep = empty_report(mode, k, t);
    const auto n = static_cast<i64>(seq.size());
    for (i64 start = 0; start + k <= n; ++start) {
        const i64 w = seq.range_weight(static_cast<std::size_t>(start), static_cast<std::size_t>(start + k));
        check_residue(seq, k, w);
        if (record(rep, w) <= t && !rep.found) {
            rep.found = true;
            rep.witness = Witness{start, 1};
        }
    }
    return rep;
}

}  // namespace

ScanReport block_scan(const SignSeq& seq, i64 k) { return window_scan(seq, k, 0, ScanMode::Block); }

ScanReport smallsum_block_scan(const SignSeq& seq, i64 k, i64 t) {
    if (!seq.letters().is_pm1()) throw PreconditionError("small-sum scan requires a {-1,1} sequence");
    if (t < 0 || t >= k) throw PreconditionError("small-sum scan requires 0 <= t < k");
    if ((k - t) % 2 != 0) throw PreconditionError("small-sum scan requires t = k (mod 2)");
    return window_scan(seq, k, t, ScanMode::SmallSum);
}

ScanReport ap_scan(const SignSeq& seq, i64 k) {
    require_window(seq, k);
    ScanReport rep = empty_report(ScanMode::Ap, k, 0);
    const auto n = static_cast<i64>(seq.size());
    const i64 max_d = k == 1 ? 1 : (n - 1) / (k - 1);
    const std::vector<i64> values = seq.values();
    // stride[i] = values[i] + values[i-d] + values[i-2d] + ... within i's class mod d.
    std::vector<i64> stride(static_cast<std::size_t>(n));
    rep.per_difference_min_abs.assign(static_cast<std::size_t>(max_d), std::numeric_limits<i64>::max());
    for (i64 d = 1; d <= max_d; ++d) {
        for (i64 i = 0; i < n; ++i) stride[i] = values[i] + (i >= d ? stride[i - d] : 0);
        const i64 span = (k - 1) * d;
        i64& per_d = rep.per_difference_min_abs[static_cast<std::size_t>(d - 1)];
        for (i64 start = 0; start + span < n; ++start) {
            const i64 w = stride[start + span] - (start >= d ? stride[start - d] : 0);
            check_residue(seq, k, w);
            const i64 a = record(rep, w);
            per_d = std::min(per_d, a);
            if (a == 0 && !rep.found) {
                rep.found = true;
                rep.witness = Witness{start, d};
            }
        }
    }
    return rep;
}

InterpolationVerdict interpolation_check(const SignSeq& seq, i64 k) {
    require_window(seq, k);
    const i64 p = seq.letters().period();
    if (k % p != 0) throw PreconditionError("interpolation check requires (r+s) | k");
    InterpolationVerdict v{
        .holds = true,
        .has_negative = false,
        .has_positive = false,
        .has_zero = false,
        .all_divisible = true,
        .max_adjacent_step = 0,
        .window_weights = {},
    };
    const auto n = static_cast<i64>(seq.size());
    for (i64 start = 0; start + k <= n; ++start) {
        const i64 w = seq.range_weight(static_cast<std::size_t>(start), static_cast<std::size_t>(start + k));
        if (!v.window_weights.empty())
            v.max_adjacent_step = std::max(v.max_adjacent_step, std::abs(w - v.window_weights.back()));
        v.window_weights.push_back(w);
        v.has_negative |= w < 0;
        v.has_positive |= w > 0;
        v.has_zero |= w == 0;
        v.all_divisible &= w % p == 0;
    }
    const bool sign_change_has_zero = !(v.has_negative && v.has_positive) || v.has_zero;
    v.holds = sign_change_has_zero && v.all_divisible && v.max_adjacent_step <= p;
    return v;
}

}  // namespace zerosum
