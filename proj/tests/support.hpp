#pragma once

// Naive reference implementations shared by the test suites. Each one recomputes
// from scratch with no prefix sums or pruning, so it is independent of the code under test.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zerosum/core.hpp"

namespace zs_test {

using zerosum::Alphabet;
using zerosum::i64;
using zerosum::SignSeq;

inline SignSeq from_mask(const Alphabet& letters, std::uint64_t mask, int n) {
    std::vector<bool> bits(n);
    for (int i = 0; i < n; ++i) bits[i] = (mask >> (n - 1 - i)) & 1U;
    return SignSeq(letters, bits);
}

inline SignSeq random_seq(const Alphabet& letters, std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(static_cast<double>(letters.r()) / static_cast<double>(letters.period()));
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = coin(rng);
    return SignSeq(letters, bits);
}

inline std::vector<i64> plain_values(const SignSeq& seq) {
    std::vector<i64> out;
    for (std::size_t i = 0; i < seq.size(); ++i) out.push_back(seq.selector(i) ? seq.letters().s() : -seq.letters().r());
    return out;
}

struct NaiveAp {
    bool found = false;
    i64 start = -1;
    i64 difference = -1;
    i64 min_abs = -1;
    i64 count = 0;
};

// Ordered by (d, start), matching the scanner's witness convention.
inline NaiveAp naive_ap(const SignSeq& seq, i64 k) {
    const auto v = plain_values(seq);
    const i64 n = static_cast<i64>(v.size());
    NaiveAp out;
    const i64 max_d = k == 1 ? 1 : (n - 1) / (k - 1);
    for (i64 d = 1; d <= max_d; ++d) {
        for (i64 a = 0; a + (k - 1) * d < n; ++a) {
            i64 w = 0;
            for (i64 j = 0; j < k; ++j) w += v[a + j * d];
            ++out.count;
            const i64 aw = w < 0 ? -w : w;
            if (out.min_abs < 0 || aw < out.min_abs) out.min_abs = aw;
            if (w == 0 && !out.found) {
                out.found = true;
                out.start = a;
                out.difference = d;
            }
        }
    }
    return out;
}

inline bool naive_has_zero_block(const SignSeq& seq, i64 k) {
    const auto v = plain_values(seq);
    for (std::size_t a = 0; a + k <= v.size(); ++a) {
        i64 w = 0;
        for (i64 j = 0; j < k; ++j) w += v[a + j];
        if (w == 0) return true;
    }
    return false;
}

inline bool naive_has_zero_ap(const SignSeq& seq, i64 k) { return naive_ap(seq, k).found; }

inline i64 total(const SignSeq& seq) {
    i64 w = 0;
    for (i64 x : plain_values(seq)) w += x;
    return w;
}

// Largest n <= cap admitting a sequence with |total| <= q and no zero-sum k-block
// (or AP), by plain bitmask enumeration. Only for small cap.
inline std::optional<i64> brute_max_avoiding(const Alphabet& letters, i64 k, i64 q, i64 cap, bool ap) {
    std::optional<i64> best;
    for (i64 n = k; n <= cap; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const SignSeq seq = from_mask(letters, mask, static_cast<int>(n));
            const i64 t = total(seq);
            if ((t < 0 ? -t : t) > q) continue;
            if (ap ? naive_has_zero_ap(seq, k) : naive_has_zero_block(seq, k)) continue;
            best = n;
            break;
        }
    }
    return best;
}

}  // namespace zs_test
