#include "zerosum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <thread>

#include "zerosum/constructions.hpp"
#include "zerosum/scanners.hpp"

namespace zerosum {

const char* to_string(TargetMode mode) { return mode == TargetMode::Block ? "block" : "ap"; }

std::uint64_t default_budget() {
    constexpr std::uint64_t kDefault = 1'000'000'000ULL;
    const char* env = std::getenv("ZEROSUM_BUDGET");
    if (env == nullptr || *env == '\0') return kDefault;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kDefault;
    return v;
}

std::vector<i64> admissible_minus_counts(const Alphabet& letters, i64 n, i64 q) {
    std::vector<i64> out;
    for (i64 x = 0; x <= n; ++x) {
        const i64 w = checked::sub(checked::mul(letters.s(), n - x), checked::mul(letters.r(), x));
        if (w <= q && w >= -q) out.push_back(x);
    }
    return out;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

i64 max_difference(i64 n, i64 k) { return k == 1 ? 1 : (n - 1) / (k - 1); }

struct ShardResult {
    std::uint64_t candidates = 0;
    std::uint64_t avoiding = 0;
    std::vector<std::vector<bool>> witnesses;
};

// Depth-first walker over letter placements of one fixed length.
class Walker {
public:
    Walker(const Params& params, TargetMode mode, i64 n, const OracleOptions& options)
        : minus_(-params.r()),
          plus_(params.s()),
          k_(params.k()),
          n_(n),
          mode_(mode),
          prune_(options.prune),
          limit_(options.witness_limit),
          max_d_(mode == TargetMode::Ap ? max_difference(n, params.k()) : 0),
          prefix_(static_cast<std::size_t>(n + 1), 0),
          stride_(static_cast<std::size_t>(max_d_ * n), 0),
          bits_(static_cast<std::size_t>(n)) {}

    ShardResult run(i64 minus_total, const std::vector<bool>& head) {
        out_ = ShardResult{};
        i64 minus_left = minus_total;
        i64 plus_left = n_ - minus_total;
        bool dead = false;
        for (std::size_t i = 0; i < head.size(); ++i) {
            (head[i] ? plus_left : minus_left) -= 1;
            if (minus_left < 0 || plus_left < 0) return out_;
            const bool hit = place(static_cast<i64>(i), head[i]);
            if (hit && prune_) return out_;
            dead = dead || hit;
        }
        walk(static_cast<i64>(head.size()), minus_left, plus_left, dead);
        return std::move(out_);
    }

private:
    // Writes position i; true when a zero-sum pattern ends exactly at i.
    bool place(i64 i, bool plus) {
        const i64 v = plus ? plus_ : minus_;
        bits_[static_cast<std::size_t>(i)] = plus;
        prefix_[i + 1] = prefix_[i] + v;
        if (mode_ == TargetMode::Block) return i + 1 >= k_ && prefix_[i + 1] == prefix_[i + 1 - k_];

        for (i64 d = 1; d <= max_d_; ++d) {
            i64* row = &stride_[static_cast<std::size_t>((d - 1) * n_)];
            row[i] = v + (i >= d ? row[i - d] : 0);
        }
        const i64 reach = std::min(max_d_, k_ == 1 ? 1 : i / (k_ - 1));
        for (i64 d = 1; d <= reach; ++d) {
            const i64* row = &stride_[static_cast<std::size_t>((d - 1) * n_)];
            const i64 lo = i - k_ * d;
            if (row[i] - (lo >= 0 ? row[lo] : 0) == 0) return true;
        }
        return false;
    }

    void walk(i64 i, i64 minus_left, i64 plus_left, bool dead) {
        if (i == n_) {
            ++out_.candidates;
            if (!dead) {
                ++out_.avoiding;
                if (out_.witnesses.size() < limit_) out_.witnesses.push_back(bits_);
            }
            return;
        }
        if (minus_left > 0) {
            const bool hit = place(i, false);
            if (!(hit && prune_)) walk(i + 1, minus_left - 1, plus_left, dead || hit);
        }
        if (plus_left > 0) {
            const bool hit = place(i, true);
            if (!(hit && prune_)) walk(i + 1, minus_left, plus_left - 1, dead || hit);
        }
    }

    i64 minus_;
    i64 plus_;
    i64 k_;
    i64 n_;
    TargetMode mode_;
    bool prune_;
    std::size_t limit_;
    i64 max_d_;
    std::vector<i64> prefix_;
    std::vector<i64> stride_;
    std::vector<bool> bits_;
    ShardResult out_;
};

struct Task {
    i64 minus_total;
    std::vector<bool> head;
};

// All feasible heads of the given length in lexicographic order (0 before 1).
void collect_heads(std::vector<Task>& tasks, i64 minus_total, i64 plus_total, std::size_t length,
                   std::vector<bool>& head) {
    if (head.size() == length) {
        tasks.push_back(Task{minus_total, head});
        return;
    }
    const auto minus_used = static_cast<i64>(std::count(head.begin(), head.end(), false));
    const auto plus_used = static_cast<i64>(head.size()) - minus_used;
    if (minus_used < minus_total) {
        head.push_back(false);
        collect_heads(tasks, minus_total, plus_total, length, head);
        head.pop_back();
    }
    if (plus_used < plus_total) {
        head.push_back(true);
        collect_heads(tasks, minus_total, plus_total, length, head);
        head.pop_back();
    }
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

LengthStats enumerate_length(const Params& params, TargetMode mode, i64 n, const std::vector<i64>& minus_counts,
                             const OracleOptions& options, unsigned threads,
                             std::vector<std::vector<bool>>& witnesses) {
    unsigned bits = options.shard_bits;
    if (bits == 0) bits = static_cast<unsigned>(std::min<std::size_t>(12, std::bit_width(64u * threads)));
    const auto head_len = static_cast<std::size_t>(std::min<i64>(n, bits));

    std::vector<Task> tasks;
    std::vector<bool> head;
    for (i64 x : minus_counts) collect_heads(tasks, x, n - x, head_len, head);

    std::vector<ShardResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        Walker walker(params, mode, n, options);
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            results[i] = walker.run(tasks[i].minus_total, tasks[i].head);
    };
    const unsigned pool = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (pool == 1) {
        worker();
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(pool);
        for (unsigned t = 0; t < pool; ++t) workers.emplace_back(worker);
    }

    LengthStats stats{n, 0, 0};
    witnesses.clear();
    for (auto& r : results) {
        stats.candidates += r.candidates;
        stats.avoiding += r.avoiding;
        for (auto& w : r.witnesses) witnesses.push_back(std::move(w));
    }
    std::sort(witnesses.begin(), witnesses.end());
    if (witnesses.size() > options.witness_limit) witnesses.resize(options.witness_limit);
    return stats;
}

}  // namespace

std::uint64_t estimate_cost(const Params& params, TargetMode mode, i64 q, i64 cap) {
    std::uint64_t total = 0;
    for (i64 n = params.k(); n <= cap; ++n) {
        const std::uint64_t per_node =
            mode == TargetMode::Block ? 1 : static_cast<std::uint64_t>(max_difference(n, params.k()));
        for (i64 x : admissible_minus_counts(params.letters(), n, q)) {
            // Nodes of the placement tree: sum over (a <= x, b <= n-x) of C(a+b, a).
            const std::uint64_t nodes = binomial_saturating(n + 2, x + 1) - 1;
            total = sat_add(total, sat_mul(nodes, per_node));
        }
    }
    return total;
}

ThresholdResult exact_threshold(const Params& params, TargetMode mode, i64 q, i64 cap, const OracleOptions& options) {
    if (q < 0) throw PreconditionError("q must be nonnegative");
    const std::uint64_t estimate = estimate_cost(params, mode, q, cap);
    if (estimate > options.budget)
        throw BudgetError("estimated " + std::to_string(estimate) + " window evaluations exceed the ceiling of " +
                              std::to_string(options.budget),
                          estimate, options.budget);

    ThresholdResult res{
        .params = params,
        .mode = mode,
        .q = q,
        .max_avoiding_n = std::nullopt,
        .derived_threshold = params.k(),
        .witnesses = {},
        .avoiding_at_max = 0,
        .search_cap = cap,
        .exhaustive = true,
        .degenerate = true,
        .estimate = estimate,
        .per_length = {},
    };
    const unsigned threads = resolve_threads(options.threads);
    std::vector<std::vector<bool>> witnesses;
    for (i64 n = params.k(); n <= cap; ++n) {
        const std::vector<i64> counts = admissible_minus_counts(params.letters(), n, q);
        if (counts.empty()) continue;
        res.degenerate = false;
        const LengthStats stats = enumerate_length(params, mode, n, counts, options, threads, witnesses);
        res.per_length.push_back(stats);
        if (stats.avoiding > 0) {
            res.max_avoiding_n = n;
            res.avoiding_at_max = stats.avoiding;
            res.witnesses.clear();
            for (auto& w : witnesses) res.witnesses.emplace_back(params.letters(), std::move(w));
        }
    }
    if (res.max_avoiding_n) res.derived_threshold = std::max(params.k(), *res.max_avoiding_n + 1);
    return res;
}

TwoKVerdict verify_2k_proposition(i64 k) {
    if (k < 2 || k % 2 != 0) throw PreconditionError("2k proposition requires even k >= 2");
    if (k > 12) throw BudgetError("C(2k, k) exceeds the enumeration budget for k > 12", binomial_saturating(2 * k, k),
                                  binomial_saturating(24, 12));
    const i64 n = 2 * k;
    TwoKVerdict out{k, true, 0, std::nullopt};
    // Gosper's hack over n-bit masks with exactly k ones.
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t mask = (1u << k) - 1; mask < limit;) {
        std::vector<bool> bits(static_cast<std::size_t>(n));
        for (i64 i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        SignSeq seq(Alphabet(1, 1), std::move(bits));
        ++out.sequences_checked;
        if (!block_scan(seq, k).found) {
            out.holds = false;
            out.counterexample = std::move(seq);
            break;
        }
        const std::uint32_t low = mask & -mask;
        const std::uint32_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    return out;
}

RigidityVerdict verify_pow2_rigidity(i64 v) {
    if (v < 2 || v > 4) throw PreconditionError("pow2 rigidity enumeration requires 2 <= v <= 4");
    const i64 size = i64{1} << v;
    RigidityVerdict out{v, false, 0, {}};
    const std::uint64_t functions = std::uint64_t{1} << size;
    for (std::uint64_t mask = 0; mask < functions; ++mask) {
        ++out.functions_checked;
        bool survives = true;
        for (i64 w = 0; w < v && survives; ++w) {
            const i64 diff = i64{1} << w;
            for (i64 j = 0; j < diff && survives; ++j) {
                i64 sum = 0;
                for (i64 idx = j; idx < size; idx += diff) sum += ((mask >> idx) & 1u) ? 1 : -1;
                survives = sum != 0;
            }
        }
        if (survives) out.survivors.push_back(static_cast<std::uint32_t>(mask));
    }
    const auto all_plus = static_cast<std::uint32_t>(functions - 1);
    out.holds = out.survivors == std::vector<std::uint32_t>{0u, all_plus};
    return out;
}

ResidueLemmaVerdict verify_lemma_residue_properties(i64 k, const std::vector<i64>& factors) {
    if (k > 2310) throw PreconditionError("residue lemma enumeration is limited to k <= 2310");
    const ResidueFunction f = build_ap_mod_k_product(k, factors);
    ResidueLemmaVerdict out{
        .k = k,
        .factors = factors,
        .holds = true,
        .counts_hold = f.plus_count == k / 2 + 1 && f.minus_count == k / 2 - 1,
        .plus_count = f.plus_count,
        .minus_count = f.minus_count,
        .progressions_checked = 0,
        .failure = std::nullopt,
    };
    for (i64 d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        for (i64 start = 0; start < d; ++start) {
            i64 sum = 0;
            for (i64 j = start; j < k; j += d) sum += f.values.value(static_cast<std::size_t>(j));
            ++out.progressions_checked;
            if (sum == 0 && !out.failure) out.failure = std::make_pair(d, start);
        }
    }
    out.holds = out.counts_hold && !out.failure;
    return out;
}

}  // namespace zerosum
