// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "zerosum/constructions.hpp"
#include "zerosum/formulas.hpp"
#include "zerosum/good_shift.hpp"
#include "zerosum/oracle.hpp"
#include "zerosum/scanners.hpp"

using namespace zerosum;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail << what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Check&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
                c.ok ? "" : " ", c.ok ? "" : c.detail.str().c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
}

}  // namespace

int main() {
    criterion(1, "formula/oracle agreement on block thresholds", [](Check& c) {
        for (auto [r, s, k] : {std::tuple{1, 1, 4}, {1, 1, 6}, {1, 1, 8}, {1, 2, 3}, {1, 2, 6}}) {
            const Params p(r, s, k);
            const i64 formula = block_threshold(p).n_exact;
            const i64 cap = 2 * formula;
            const ThresholdResult res = exact_threshold(p, TargetMode::Block, 0, cap);
            c.expect(res.exhaustive && res.derived_threshold == formula,
                     p.str() + ": oracle " + std::to_string(res.derived_threshold) + " vs formula " +
                         std::to_string(formula));
        }
    });

    criterion(2, "extremal certificate at (1,2,6)", [](Check& c) {
        const Construction con = build_block_extremal(Params(1, 2, 6));
        const ScanReport scan = block_scan(con.seq, 6);
        c.expect(con.length == 9 && con.length == block_threshold(Params(1, 2, 6)).n_exact - 1, "length");
        c.expect(con.seq.total_weight() == 0, "total weight");
        c.expect(!scan.found && scan.min_weight == 3 && scan.max_weight == 3, "window weights");
    });

    criterion(3, "2k proposition for k in {2,4,6,8,10}", [](Check& c) {
        for (i64 k : {2, 4, 6, 8, 10}) {
            const TwoKVerdict v = verify_2k_proposition(k);
            c.expect(v.holds && v.sequences_checked == binomial_saturating(2 * k, k), "k=" + std::to_string(k));
        }
    });

    criterion(4, "AP constructions avoid zero-sum progressions", [](Check& c) {
        for (i64 k = 2; k <= 40; k += 2) {
            const Construction con = build_ap_mod_k_plus1(k);
            c.expect(con.length == (k + 4) * ((k - 2) / 6), "k+1 length at k=" + std::to_string(k));
            if (con.length >= k) c.expect(!ap_scan(con.seq, k).found, "k+1 witness at k=" + std::to_string(k));
        }
        for (i64 k = 6; k <= 42; k += 4) {
            const Construction con = build_ap_mod_k(k);
            if (con.length < k) continue;
            const ScanReport scan = ap_scan(con.seq, k);
            c.expect(!scan.found, "mod-k witness at k=" + std::to_string(k));
            for (std::size_t i = 0; i < scan.per_difference_min_abs.size(); ++i)
                c.expect(scan.per_difference_min_abs[i] >= gcd(static_cast<i64>(i + 1), k),
                         "gcd bound at k=" + std::to_string(k) + " d=" + std::to_string(i + 1));
        }
    });

    criterion(5, "quadratic lower bound table at (1,1,k), alpha = 1", [](Check& c) {
        for (i64 k = 2; k <= 200; k += 2)
            c.expect(ap_lower_bound_value(Params(1, 1, k), 1) == (k + 4) * ((k - 2) / 6), "k=" + std::to_string(k));
    });

    criterion(6, "power-of-2 rigidity for v in {2,3,4}", [](Check& c) {
        for (i64 v : {2, 3, 4}) {
            const RigidityVerdict res = verify_pow2_rigidity(v);
            c.expect(res.holds && res.survivors.size() == 2, "v=" + std::to_string(v));
        }
    });

    criterion(7, "minimum good shifts for (1,1) and (1,2), k <= 1000", [](Check& c) {
        for (i64 k = 1; k <= 1000; ++k) {
            const auto s = min_good_shift(Params(1, 1, k)).shift;
            c.expect(s && s->alpha == 1, "(1,1) k=" + std::to_string(k));
        }
        for (i64 k = 3; k <= 1000; k += 3) {
            const auto s = min_good_shift(Params(1, 2, k)).shift;
            c.expect(s && (s->alpha == 1 || s->alpha == 2) && (s->alpha - k - 1) % 2 == 0,
                     "(1,2) k=" + std::to_string(k));
        }
    });

    criterion(8, "interpolation property on random sequences", [](Check& c) {
        std::mt19937_64 rng(8);
        for (auto [r, s] : {std::pair<i64, i64>{1, 1}, {1, 2}, {2, 3}}) {
            const Alphabet letters(r, s);
            for (int i = 0; i < 10000; ++i) {
                const i64 k = letters.period() * (1 + static_cast<i64>(rng() % 6));
                const std::size_t n = static_cast<std::size_t>(k) + rng() % 60;
                const SignSeq seq = zs_test::random_seq(letters, n, rng);
                c.expect(interpolation_check(seq, k).holds, "(" + std::to_string(r) + "," + std::to_string(s) + ")");
            }
        }
    });

    criterion(9, "ap_scan agrees with the naive rescan", [](Check& c) {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 1000; ++i) {
            const Alphabet letters = i % 2 ? Alphabet(1, 1) : Alphabet(2, 3);
            const std::size_t n = 1 + rng() % 200;
            const i64 k = 1 + static_cast<i64>(rng() % std::min<std::size_t>(n, 12));
            const SignSeq seq = zs_test::random_seq(letters, n, rng);
            const ScanReport fast = ap_scan(seq, k);
            const auto slow = zs_test::naive_ap(seq, k);
            bool same = fast.found == slow.found && fast.min_abs_weight == slow.min_abs;
            if (same && slow.found) same = fast.witness->start == slow.start && fast.witness->difference == slow.difference;
            c.expect(same, "iteration " + std::to_string(i));
        }
    });

    criterion(10, "two-p construction for p in {3,5,7}", [](Check& c) {
        for (i64 p : {3, 5, 7}) {
            const Construction con = build_ap_two_p(p);
            c.expect(con.length == p * p - 1 && con.seq.total_weight() == 0, "shape p=" + std::to_string(p));
            c.expect(!ap_scan(con.seq, 2 * p).found, "witness p=" + std::to_string(p));
        }
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
