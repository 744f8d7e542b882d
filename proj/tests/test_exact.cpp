#include <doctest.h>

#include <limits>
#include <vector>

#include "kmincc/enumeration.hpp"
#include "kmincc/errors.hpp"
#include "kmincc/exact.hpp"
#include "kmincc/rng.hpp"
#include "test_util.hpp"

using namespace kmincc;

namespace {

// Independent route: walk the public enumerator and score with the pairwise
// cost, keeping the first (lexicographically smallest) minimum.
Solution enumerate_and_score(const Instance& inst, std::int32_t k) {
    PartitionEnumerator e(inst.size(), k);
    Cost best = std::numeric_limits<Cost>::max();
    std::vector<std::int32_t> best_labels;
    while (e.next()) {
        const Cost c = cost_pairwise(canonicalize(e.labels()), inst);
        if (c < best) {
            best = c;
            best_labels = e.labels();
        }
    }
    return Solution{canonicalize(best_labels), best, k};
}

}  // namespace

TEST_CASE("solve_exact on the worked examples") {
    const Instance inst = testutil::running_example();
    const Solution sol = solve_exact(inst, 2);
    CHECK(sol.cost == 3);
    CHECK(sol.partition.block_count() <= 2);
    CHECK(cost_of(sol.partition, inst) == sol.cost);
}

TEST_CASE("unanimous instance is solved at cost zero") {
    const Partition p = partition_from_blocks(5, {{0, 3}, {1, 2, 4}});
    const Instance inst = build_instance({p, p, p});
    const Solution sol = solve_exact(inst, 2);
    CHECK(sol.cost == 0);
    CHECK(sol.partition == p);
}

TEST_CASE("k=1 forces the one-block solution") {
    Rng rng(42);
    const Instance inst = testutil::random_instance(rng, 7, 3, 3);
    const Solution sol = solve_exact(inst, 1);
    CHECK(sol.partition == one_block_partition(7));
    Cost expected = 0;
    for (Element i = 0; i < 7; ++i)
        for (Element j = i + 1; j < 7; ++j) expected += inst.sep_count(i, j);
    CHECK(sol.cost == expected);
}

TEST_CASE("solve_exact matches the enumerate-and-score route") {
    Rng rng(77);
    for (int round = 0; round < 60; ++round) {
        const Element n = 2 + static_cast<Element>(rng.next_below(7));
        const std::int32_t l = 1 + static_cast<std::int32_t>(rng.next_below(4));
        const std::int32_t k = 1 + static_cast<std::int32_t>(rng.next_below(3));
        const Instance inst = testutil::random_instance(rng, n, l, 4);
        const Solution fast = solve_exact(inst, k);
        const Solution slow = enumerate_and_score(inst, k);
        CHECK(fast.cost == slow.cost);
        CHECK(fast.partition == slow.partition);  // shared lexicographic tie-break
    }
}

TEST_CASE("solve_exact lower-bounds random candidates") {
    Rng rng(88);
    const Instance inst = testutil::random_instance(rng, 9, 3, 3);
    const Solution sol = solve_exact(inst, 3);
    for (int round = 0; round < 1000; ++round) {
        const Partition candidate = testutil::random_partition(rng, 9, 3);
        CHECK(sol.cost <= cost_of(candidate, inst));
    }
}

TEST_CASE("single-input instance solves to cost zero at k=n") {
    Rng rng(99);
    const Partition p = testutil::random_partition(rng, 6, 4);
    CHECK(solve_exact(build_instance({p}), 6).cost == 0);
}

TEST_CASE("exact cost is non-increasing in k") {
    Rng rng(111);
    for (int round = 0; round < 20; ++round) {
        const Element n = 3 + static_cast<Element>(rng.next_below(5));
        const Instance inst = testutil::random_instance(rng, n, 3, 4);
        Cost previous = std::numeric_limits<Cost>::max();
        for (std::int32_t k = 1; k <= 4; ++k) {
            const Cost c = solve_exact(inst, k).cost;
            CHECK(c <= previous);
            previous = c;
        }
    }
}

TEST_CASE("ties break to the lexicographically smallest labeling") {
    // s(0,1) = 1 of l = 2: both the one-block and the two-singleton candidates
    // cost 1; the one-block labeling [0,0] is lexicographically smaller.
    const Instance inst =
        build_instance({partition_from_blocks(2, {{0}, {1}}), partition_from_blocks(2, {{0, 1}})});
    const Solution sol = solve_exact(inst, 2);
    CHECK(sol.cost == 1);
    CHECK(sol.partition == one_block_partition(2));
}

TEST_CASE("budget gate") {
    Rng rng(123);
    const Instance inst = testutil::random_instance(rng, 12, 2, 3);
    CHECK_THROWS_WITH_AS(solve_exact(inst, 3, 100), "enumeration budget exceeded", BudgetError);
}

// ---------------------------------------------------------------------------
// Minimum bisection
// ---------------------------------------------------------------------------

namespace {

// Bitmask oracle over every subset of vertices with |subset| = n/2.
std::int64_t min_bisection_oracle(const Graph& g) {
    const int n = g.vertex_count;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != n / 2) continue;
        std::int64_t cut = 0;
        for (const auto& [u, v] : g.edges)
            cut += ((mask >> u) & 1u) != ((mask >> v) & 1u);
        best = std::min(best, cut);
    }
    return best;
}

}  // namespace

TEST_CASE("min bisection on the worked examples") {
    const Graph cycle = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(solve_min_bisection(cycle).cut == 2);

    const Graph empty = make_graph(4, {});
    const Bisection be = solve_min_bisection(empty);
    CHECK(be.cut == 0);
    CHECK(be.side == std::vector<std::uint8_t>{0, 0, 1, 1});  // lexicographic tie-break

    const Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(solve_min_bisection(k4).cut == 4);
}

TEST_CASE("min bisection matches the bitmask oracle") {
    Rng rng(321);
    for (int round = 0; round < 40; ++round) {
        const std::int32_t n = 2 * (1 + static_cast<std::int32_t>(rng.next_below(4)));
        std::vector<std::pair<std::int32_t, std::int32_t>> edges;
        for (std::int32_t i = 0; i < n; ++i)
            for (std::int32_t j = i + 1; j < n; ++j)
                if (rng.next_double() < 0.4) edges.emplace_back(i, j);
        const Graph g = make_graph(n, std::move(edges));
        const Bisection b = solve_min_bisection(g);
        CHECK(b.cut == min_bisection_oracle(g));
        CHECK(cut_size(g, b.side) == b.cut);
        std::int64_t ones = 0;
        for (auto s : b.side) ones += s;
        CHECK(ones == n / 2);
    }
}

TEST_CASE("graph validation") {
    CHECK_THROWS_WITH_AS(make_graph(3, {}), "MIN-BIS requires even n", std::invalid_argument);
    CHECK_THROWS_AS(make_graph(4, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(4, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(solve_min_bisection(make_graph(22, {}), 20), "bisection cap exceeded",
                         BudgetError);
}
