#pragma once

// Overflow-checked 64-bit integer helpers and an exact rational type.
// Every threshold formula is evaluated through these; wraparound is an error.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "zerosum/error.hpp"

namespace zerosum {

using i64 = std::int64_t;

namespace checked {

inline i64 add(i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
    return out;
}

inline i64 sub(i64 a, i64 b) {
    i64 out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
    return out;
}

inline i64 mul(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
    return out;
}

inline i64 neg(i64 a) { return sub(0, a); }

}  // namespace checked

/// Floor division for any signs; b must be nonzero.
i64 floor_div(i64 a, i64 b);
/// Ceiling division for any signs; b must be nonzero.
i64 ceil_div(i64 a, i64 b);
/// Least nonnegative residue of a modulo m > 0.
i64 mod_floor(i64 a, i64 m);
i64 gcd(i64 a, i64 b);
/// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial_saturating(i64 n, i64 k);

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(i64 value) : num_(value), den_(1) {}  // NOLINT: implicit by intent
    Rational(i64 num, i64 den);

    i64 num() const noexcept { return num_; }
    i64 den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    i64 floor() const { return floor_div(num_, den_); }
    i64 ceil() const { return ceil_div(num_, den_); }
    /// Value as an integer; FormulaDomainError when not integral.
    i64 to_integer(const std::string& what) const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(checked::neg(num_), den_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace zerosum
