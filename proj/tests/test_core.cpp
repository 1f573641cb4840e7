#include <algorithm>
#include <map>

#include "doctest.h"
#include "support.hpp"
#include "zerosum/core.hpp"

using namespace zerosum;

TEST_CASE("alphabet and params validation") {
    CHECK_THROWS_AS(Alphabet(2, 4), PreconditionError);
    CHECK_THROWS_AS(Alphabet(0, 1), PreconditionError);
    CHECK_THROWS_AS(Params(1, 2, 0), PreconditionError);
    const Params p(1, 2, 7);
    CHECK_FALSE(p.k_divisible());
    CHECK_THROWS_AS(p.require_divisible(), PreconditionError);
    CHECK(Params(1, 2, 6).k_divisible());
    CHECK(Alphabet(2, 3).swapped() == Alphabet(3, 2));
}

TEST_CASE("sign sequence values, weights and negation") {
    const Alphabet letters(1, 2);
    const std::vector<i64> raw{-1, -1, -1, 2, 2, 2, -1, -1, -1};
    const SignSeq seq = SignSeq::from_values(letters, raw);
    CHECK(seq.size() == 9);
    CHECK(seq.values() == raw);
    CHECK(seq.total_weight() == 0);
    CHECK(seq.range_weight(0, 6) == 3);
    CHECK(seq.range_weight(2, 5) == 3);
    CHECK(seq.prefix(3) == -3);
    CHECK(seq.count_minus() == 6);
    CHECK(seq.count_plus() == 3);
    const std::vector<std::size_t> idx{0, 3, 3};
    CHECK(weight(seq, idx) == 3);
    const std::vector<std::size_t> bad{9};
    CHECK_THROWS_AS(weight(seq, bad), InputError);
    const std::vector<i64> wrong{-1, 1};
    CHECK_THROWS_AS(SignSeq::from_values(letters, wrong), InputError);

    const SignSeq neg = seq.negated();
    CHECK(neg.letters() == Alphabet(2, 1));
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(neg.value(i) == -seq.value(i));
    CHECK(neg.negated() == seq);
}

TEST_CASE("residue profiles match direct enumeration for m <= 64") {
    for (i64 m = 1; m <= 64; ++m) {
        for (i64 d = 1; d <= m + 3; ++d) {
            for (i64 start : {i64{0}, i64{5}, i64{-3}}) {
                std::map<i64, i64> hits;
                for (i64 j = 0; j < m; ++j) ++hits[mod_floor(start + j * d, m)];
                const ResidueProfile p = residue_profile(start, d, m);
                REQUIRE(p.distinct_count == static_cast<i64>(hits.size()));
                CHECK(p.multiplicity == gcd(d, m));
                CHECK(p.first_residue == hits.begin()->first);
                for (const auto& [res, count] : hits) {
                    CHECK(count == p.multiplicity);
                    CHECK((res - p.first_residue) % p.step == 0);
                }
            }
        }
    }
}

TEST_CASE("weight ranges match brute force for alpha <= 16") {
    for (auto [r, s] : std::vector<std::pair<i64, i64>>{{1, 1}, {1, 2}, {2, 3}, {3, 5}}) {
        const Alphabet letters(r, s);
        for (i64 alpha = 0; alpha <= 16; ++alpha) {
            std::vector<i64> direct;
            for (i64 plus = 0; plus <= alpha; ++plus) direct.push_back(s * plus - r * (alpha - plus));
            const WeightRange w = weight_range(alpha, letters);
            CHECK(w.elements() == direct);
            CHECK(w.low == -r * alpha);
            CHECK(w.high() == s * alpha);
            for (i64 x = -r * alpha - 2; x <= s * alpha + 2; ++x)
                CHECK(w.contains(x) == std::binary_search(direct.begin(), direct.end(), x));
        }
    }
}
