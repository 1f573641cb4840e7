#include "doctest.h"
#include "support.hpp"
#include "zerosum/constructions.hpp"
#include "zerosum/scanners.hpp"

using namespace zerosum;

namespace {

SignSeq alternating(i64 n) {
    std::vector<bool> bits(n);
    for (i64 i = 0; i < n; ++i) bits[i] = i % 2 == 0;
    return SignSeq(Alphabet(1, 1), bits);
}

}  // namespace

TEST_CASE("block scan") {
    const ScanReport a = block_scan(alternating(4), 2);
    CHECK(a.found);
    CHECK(a.witness == Witness{0, 1});
    CHECK(a.scanned_count == 3);

    const std::vector<i64> v{-1, -1, -1, 2, 2, 2, -1, -1, -1};
    const ScanReport b = block_scan(SignSeq::from_values(Alphabet(1, 2), v), 6);
    CHECK_FALSE(b.found);
    CHECK(b.min_abs_weight == 3);
    CHECK(b.min_weight == 3);
    CHECK(b.max_weight == 3);
    CHECK_THROWS_AS(block_scan(alternating(3), 4), PreconditionError);
}

TEST_CASE("ap scan at documented points") {
    const ScanReport a = ap_scan(build_ap_mod_k_plus1(8).seq, 8);
    CHECK_FALSE(a.found);
    CHECK(a.scanned_count == 5);
    CHECK(a.min_abs_weight == 2);

    const ScanReport b = ap_scan(alternating(8), 4);
    CHECK(b.found);
    CHECK(b.witness == Witness{0, 1});

    const Construction c = build_ap_mod_k(10);
    REQUIRE(c.length == 12);
    const ScanReport d = ap_scan(c.seq, 10);
    CHECK_FALSE(d.found);
    for (std::size_t i = 0; i < d.per_difference_min_abs.size(); ++i)
        CHECK(d.per_difference_min_abs[i] >= gcd(static_cast<i64>(i + 1), 10));
}

TEST_CASE("ap scan equals the naive rescan") {
    std::mt19937_64 rng(20240611);
    for (int iter = 0; iter < 400; ++iter) {
        const Alphabet letters = iter % 3 == 0 ? Alphabet(1, 1) : iter % 3 == 1 ? Alphabet(1, 2) : Alphabet(2, 3);
        const std::size_t n = 1 + rng() % 80;
        const i64 k = 1 + static_cast<i64>(rng() % n);
        const SignSeq seq = zs_test::random_seq(letters, n, rng);
        const ScanReport fast = ap_scan(seq, k);
        const auto slow = zs_test::naive_ap(seq, k);
        CHECK(fast.found == slow.found);
        CHECK(fast.min_abs_weight == slow.min_abs);
        CHECK(fast.scanned_count == slow.count);
        if (slow.found) {
            CHECK(fast.witness->start == slow.start);
            CHECK(fast.witness->difference == slow.difference);
        }
    }
}

TEST_CASE("small-sum scan") {
    const SignSeq ones(Alphabet(1, 1), std::vector<bool>(9, true));
    const ScanReport a = smallsum_block_scan(ones, 4, 2);
    CHECK_FALSE(a.found);
    CHECK(a.min_abs_weight == 4);
    CHECK(smallsum_block_scan(alternating(6), 3, 1).found);
    CHECK_THROWS_AS(smallsum_block_scan(ones, 4, 1), PreconditionError);
    CHECK_THROWS_AS(smallsum_block_scan(SignSeq(Alphabet(1, 2), std::vector<bool>(6, true)), 3, 1), PreconditionError);
}

TEST_CASE("interpolation on random sequences") {
    std::mt19937_64 rng(7);
    for (auto [r, s] : std::vector<std::pair<i64, i64>>{{1, 1}, {1, 2}, {2, 3}}) {
        const Alphabet letters(r, s);
        for (int iter = 0; iter < 500; ++iter) {
            const i64 k = letters.period() * (1 + static_cast<i64>(rng() % 4));
            const std::size_t n = static_cast<std::size_t>(k) + rng() % 40;
            const SignSeq seq = zs_test::random_seq(letters, n, rng);
            const InterpolationVerdict v = interpolation_check(seq, k);
            CHECK(v.holds);
            CHECK(v.all_divisible);
            CHECK(v.max_adjacent_step <= letters.period());
            CHECK(v.window_weights.size() == n - k + 1);
        }
    }
    CHECK_THROWS_AS(interpolation_check(alternating(8), 3), PreconditionError);
}
