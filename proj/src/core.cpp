#include "zerosum/core.hpp"

#include <numeric>
#include <sstream>

namespace zerosum {

Alphabet::Alphabet(i64 r, i64 s) : r_(r), s_(s) {
    if (r < 1 || s < 1) throw PreconditionError("alphabet requires r >= 1 and s >= 1");
    if (std::gcd(r, s) != 1)
        throw PreconditionError("alphabet requires gcd(r, s) = 1; divide both letters by their gcd");
    checked::add(r, s);
}

Params::Params(i64 r, i64 s, i64 k) : Params(Alphabet(r, s), k) {}

Params::Params(Alphabet letters, i64 k) : letters_(letters), k_(k) {
    if (k < 1) throw PreconditionError("k must be a positive integer");
}

void Params::require_divisible() const {
    if (!k_divisible())
        throw PreconditionError("(r+s) must divide k: r+s = " + std::to_string(letters_.period()) +
                                ", k = " + std::to_string(k_));
}

std::string Params::str() const {
    std::ostringstream os;
    os << "(r=" << r() << ", s=" << s() << ", k=" << k_ << ")";
    return os.str();
}

SignSeq::SignSeq(Alphabet letters, std::vector<bool> selectors)
    : letters_(letters), bits_(std::move(selectors)) {
    prefix_.resize(bits_.size() + 1);
    prefix_[0] = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) ++plus_;
        prefix_[i + 1] = checked::add(prefix_[i], bits_[i] ? letters_.s() : -letters_.r());
    }
}

SignSeq SignSeq::from_values(Alphabet letters, std::span<const i64> values) {
    std::vector<bool> bits(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == letters.s()) {
            bits[i] = true;
        } else if (values[i] == -letters.r()) {
            bits[i] = false;
        } else {
            throw InputError("value " + std::to_string(values[i]) + " at position " + std::to_string(i) +
                             " is neither -" + std::to_string(letters.r()) + " nor " +
                             std::to_string(letters.s()));
        }
    }
    return SignSeq(letters, std::move(bits));
}

i64 SignSeq::value(std::size_t i) const { return bits_.at(i) ? letters_.s() : -letters_.r(); }

std::vector<i64> SignSeq::values() const {
    std::vector<i64> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ? letters_.s() : -letters_.r();
    return out;
}

i64 SignSeq::range_weight(std::size_t begin, std::size_t end) const {
    if (begin > end || end > bits_.size()) throw InputError("window out of range");
    return prefix_[end] - prefix_[begin];
}

SignSeq SignSeq::negated() const {
    // -(-r) = r is the "+" letter of {-s, r}, so the selector bits flip.
    std::vector<bool> flipped(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) flipped[i] = !bits_[i];
    return SignSeq(letters_.swapped(), std::move(flipped));
}

i64 weight(const SignSeq& seq, std::span<const std::size_t> indices) {
    i64 total = 0;
    for (std::size_t idx : indices) {
        if (idx >= seq.size())
            throw InputError("index " + std::to_string(idx) + " out of range for length " +
                             std::to_string(seq.size()));
        total = checked::add(total, seq.value(idx));
    }
    return total;
}

ResidueProfile residue_profile(i64 start, i64 d, i64 m) {
    if (d < 1 || m < 1) throw PreconditionError("residue_profile requires d >= 1 and m >= 1");
    const i64 g = std::gcd(d, m);
    return ResidueProfile{
        .modulus = m,
        .first_residue = mod_floor(start, m) % g,
        .step = g,
        .distinct_count = m / g,
        .multiplicity = g,
    };
}

bool WeightRange::contains(i64 w) const {
    if (w < low || w > high()) return false;
    return (w - low) % step == 0;
}

std::vector<i64> WeightRange::elements() const {
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(count));
    for (i64 i = 0; i < count; ++i) out.push_back(low + i * step);
    return out;
}

WeightRange weight_range(i64 alpha, const Alphabet& letters) {
    if (alpha < 0) throw PreconditionError("alpha must be nonnegative");
    return WeightRange{
        .alpha = alpha,
        .low = checked::neg(checked::mul(letters.r(), alpha)),
        .step = letters.period(),
        .count = checked::add(alpha, 1),
    };
}

}  // namespace zerosum
