#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zerosum/arith.hpp"

namespace zerosum {

/// The two-letter alphabet {-r, +s}. Always normalized: r, s >= 1 and gcd(r, s) == 1.
class Alphabet {
public:
    Alphabet(i64 r, i64 s);

    i64 r() const noexcept { return r_; }
    i64 s() const noexcept { return s_; }
    i64 period() const noexcept { return r_ + s_; }
    bool is_pm1() const noexcept { return r_ == 1 && s_ == 1; }
    /// The alphabet {-s, +r}; negating a {-r,s}-sequence lands here.
    Alphabet swapped() const { return Alphabet(s_, r_); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    i64 r_;
    i64 s_;
};

/// Parameters (r, s, k). The divisibility (r+s) | k is not enforced here because
/// scanners accept arbitrary k; operations that need it call require_divisible().
class Params {
public:
    Params(i64 r, i64 s, i64 k);
    Params(Alphabet letters, i64 k);

    const Alphabet& letters() const noexcept { return letters_; }
    i64 r() const noexcept { return letters_.r(); }
    i64 s() const noexcept { return letters_.s(); }
    i64 k() const noexcept { return k_; }

    bool k_divisible() const noexcept { return k_ % letters_.period() == 0; }
    void require_divisible() const;
    Params swapped() const { return Params(letters_.swapped(), k_); }
    std::string str() const;

    friend bool operator==(const Params&, const Params&) = default;

private:
    Alphabet letters_;
    i64 k_;
};

/// A finite {-r,s}-valued sequence. Position i holds -r when its selector bit
/// is 0 and +s when it is 1. Positions are 0-based. Prefix weights are built at
/// construction, so every contiguous window weight is O(1).
class SignSeq {
public:
    explicit SignSeq(Alphabet letters) : SignSeq(letters, std::vector<bool>{}) {}
    SignSeq(Alphabet letters, std::vector<bool> selectors);

    /// Builds from explicit values; each must be -r or +s.
    static SignSeq from_values(Alphabet letters, std::span<const i64> values);

    const Alphabet& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool selector(std::size_t i) const { return bits_.at(i); }
    const std::vector<bool>& selectors() const noexcept { return bits_; }

    i64 value(std::size_t i) const;
    std::vector<i64> values() const;

    i64 total_weight() const noexcept { return prefix_.back(); }
    /// Weight of positions [begin, end).
    i64 range_weight(std::size_t begin, std::size_t end) const;
    /// prefix(i) = weight of positions [0, i).
    i64 prefix(std::size_t i) const { return prefix_.at(i); }

    std::size_t count_plus() const noexcept { return plus_; }
    std::size_t count_minus() const noexcept { return bits_.size() - plus_; }

    /// Term-wise negation, re-expressed over the swapped alphabet {-s, +r}.
    SignSeq negated() const;

    friend bool operator==(const SignSeq& a, const SignSeq& b) {
        return a.letters_ == b.letters_ && a.bits_ == b.bits_;
    }

private:
    Alphabet letters_;
    std::vector<bool> bits_;
    std::vector<i64> prefix_;
    std::size_t plus_ = 0;
};

/// Sum of seq values over the given positions (repeats count with multiplicity).
i64 weight(const SignSeq& seq, std::span<const std::size_t> indices);

/// Structure of {start, start+d, ..., start+(m-1)d} reduced mod m: an arithmetic
/// progression of distinct residues, each hit the same number of times.
struct ResidueProfile {
    i64 modulus;
    i64 first_residue;  ///< least distinct residue; the residues are first_residue + i*step
    i64 step;
    i64 distinct_count;
    i64 multiplicity;
};

ResidueProfile residue_profile(i64 start, i64 d, i64 m);

/// S_alpha: every total weight a {-r,s}-sequence of length exactly alpha can have.
struct WeightRange {
    i64 alpha;
    i64 low;
    i64 step;
    i64 count;

    i64 high() const { return checked::add(low, checked::mul(step, count - 1)); }
    bool contains(i64 w) const;
    std::vector<i64> elements() const;
};

WeightRange weight_range(i64 alpha, const Alphabet& letters);

}  // namespace zerosum
