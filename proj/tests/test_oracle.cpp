#include <cstdlib>

#include "doctest.h"
#include "support.hpp"
#include "zerosum/formulas.hpp"
#include "zerosum/oracle.hpp"

using namespace zerosum;

TEST_CASE("admissible minus counts") {
    CHECK(admissible_minus_counts(Alphabet(1, 2), 9, 0) == std::vector<i64>{6});
    CHECK(admissible_minus_counts(Alphabet(1, 2), 8, 0).empty());
    CHECK(admissible_minus_counts(Alphabet(1, 1), 6, 2) == std::vector<i64>{2, 3, 4});
}

TEST_CASE("block thresholds at documented points") {
    const ThresholdResult a = exact_threshold(Params(1, 1, 6), TargetMode::Block, 0, 20);
    CHECK(a.derived_threshold == 9);
    CHECK(a.max_avoiding_n == i64{8});

    const ThresholdResult b = exact_threshold(Params(1, 2, 6), TargetMode::Block, 0, 18);
    CHECK(b.max_avoiding_n == i64{9});
    CHECK(b.derived_threshold == 10);
    REQUIRE(b.witnesses.size() == 1);
    CHECK(b.witnesses[0].values() == std::vector<i64>{-1, -1, -1, 2, 2, 2, -1, -1, -1});
}

TEST_CASE("oracle agrees with plain bitmask enumeration") {
    struct Case {
        i64 r, s, k, q, cap;
        TargetMode mode;
    };
    for (const Case c : {Case{1, 1, 4, 0, 12, TargetMode::Block}, Case{1, 1, 4, 1, 11, TargetMode::Block},
                         Case{1, 2, 3, 0, 12, TargetMode::Block}, Case{2, 3, 5, 2, 13, TargetMode::Block},
                         Case{1, 1, 4, 0, 14, TargetMode::Ap}, Case{1, 1, 3, 1, 12, TargetMode::Ap},
                         Case{1, 2, 3, 0, 12, TargetMode::Ap}}) {
        CAPTURE(c.r);
        CAPTURE(c.s);
        CAPTURE(c.k);
        CAPTURE(c.q);
        const ThresholdResult res = exact_threshold(Params(c.r, c.s, c.k), c.mode, c.q, c.cap);
        const auto brute = zs_test::brute_max_avoiding(Alphabet(c.r, c.s), c.k, c.q, c.cap, c.mode == TargetMode::Ap);
        CHECK(res.max_avoiding_n == brute);
        for (const SignSeq& w : res.witnesses) {
            CHECK(static_cast<i64>(w.size()) == *brute);
            CHECK(std::abs(w.total_weight()) <= c.q);
            if (c.mode == TargetMode::Block)
                CHECK_FALSE(zs_test::naive_has_zero_block(w, c.k));
            else
                CHECK_FALSE(zs_test::naive_has_zero_ap(w, c.k));
        }
    }
}

TEST_CASE("unpruned candidate counts are binomial") {
    OracleOptions opts;
    opts.prune = false;
    const ThresholdResult res = exact_threshold(Params(1, 2, 3), TargetMode::Block, 0, 12, opts);
    for (const LengthStats& l : res.per_length) {
        const i64 x = 2 * l.n / 3;
        CHECK(l.candidates == binomial_saturating(l.n, x));
    }
    OracleOptions q1;
    q1.prune = false;
    const ThresholdResult pm = exact_threshold(Params(1, 1, 4), TargetMode::Block, 1, 9, q1);
    for (const LengthStats& l : pm.per_length) {
        std::uint64_t expect = 0;
        for (i64 x : admissible_minus_counts(Alphabet(1, 1), l.n, 1)) expect += binomial_saturating(l.n, x);
        CHECK(l.candidates == expect);
    }
}

TEST_CASE("results do not depend on thread or shard count") {
    const Params p(1, 1, 6);
    OracleOptions base;
    base.threads = 1;
    base.shard_bits = 1;
    base.witness_limit = 1000;
    const ThresholdResult ref = exact_threshold(p, TargetMode::Block, 0, 16, base);
    for (unsigned threads : {1U, 2U, 4U, 7U}) {
        for (unsigned bits : {0U, 2U, 5U, 9U}) {
            OracleOptions o = base;
            o.threads = threads;
            o.shard_bits = bits;
            const ThresholdResult r = exact_threshold(p, TargetMode::Block, 0, 16, o);
            CHECK(r.max_avoiding_n == ref.max_avoiding_n);
            CHECK(r.witnesses == ref.witnesses);
            CHECK(r.avoiding_at_max == ref.avoiding_at_max);
            for (std::size_t i = 0; i < r.per_length.size(); ++i) {
                CHECK(r.per_length[i].candidates == ref.per_length[i].candidates);
                CHECK(r.per_length[i].avoiding == ref.per_length[i].avoiding);
            }
        }
    }
}

TEST_CASE("budget refusal and degenerate searches") {
    OracleOptions tight;
    tight.budget = 10;
    try {
        (void)exact_threshold(Params(1, 1, 8), TargetMode::Block, 0, 24, tight);
        FAIL("expected refusal");
    } catch (const BudgetError& e) {
        CHECK(e.estimate() > 10);
        CHECK(e.ceiling() == 10);
    }
    const ThresholdResult d = exact_threshold(Params(1, 2, 4), TargetMode::Block, 0, 5);
    CHECK(d.degenerate);
    CHECK(d.derived_threshold == 4);
    CHECK(estimate_cost(Params(1, 1, 4), TargetMode::Ap, 0, 10) > estimate_cost(Params(1, 1, 4), TargetMode::Block, 0, 10));
}

TEST_CASE("proposition and lemma checkers") {
    for (i64 k : {2, 4, 6}) {
        const TwoKVerdict v = verify_2k_proposition(k);
        CHECK(v.holds);
        CHECK(v.sequences_checked == binomial_saturating(2 * k, k));
    }
    CHECK_THROWS_AS(verify_2k_proposition(3), PreconditionError);
    CHECK_THROWS_AS(verify_2k_proposition(14), BudgetError);

    for (i64 v = 2; v <= 3; ++v) {
        const RigidityVerdict r = verify_pow2_rigidity(v);
        CHECK(r.holds);
        CHECK(r.survivors.size() == 2);
        CHECK(r.functions_checked == (std::uint64_t{1} << (1 << v)));
    }
    CHECK(verify_lemma_residue_properties(6, {3}).holds);
    CHECK(verify_lemma_residue_properties(30, {3, 5}).holds);
    CHECK(verify_lemma_residue_properties(30, {3, 5}).counts_hold);
}
