#include "zerosum/arith.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace zerosum {

i64 floor_div(i64 a, i64 b) {
    if (b == 0) throw PreconditionError("division by zero");
    if (a == std::numeric_limits<i64>::min() && b == -1) throw OverflowError("integer overflow in division");
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div(i64 a, i64 b) {
    if (b == 0) throw PreconditionError("division by zero");
    if (a == std::numeric_limits<i64>::min() && b == -1) throw OverflowError("integer overflow in division");
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

i64 mod_floor(i64 a, i64 m) {
    if (m <= 0) throw PreconditionError("modulus must be positive");
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

std::uint64_t binomial_saturating(i64 n, i64 k) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (i64 i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

i64 narrow(__int128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw OverflowError("rational component exceeds 64 bits");
    return static_cast<i64>(v);
}

Rational make(__int128 num, __int128 den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(i64 num, i64 den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    i64 g = std::gcd(num, den);
    if (g == 0) g = 1;
    num /= g;
    den /= g;
    if (den < 0) {
        num = checked::neg(num);
        den = checked::neg(den);
    }
    num_ = num;
    den_ = den;
}

i64 Rational::to_integer(const std::string& what) const {
    if (den_ != 1) throw FormulaDomainError(what + " = " + str() + " is not an integer");
    return num_;
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw PreconditionError("rational division by zero");
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace zerosum
