#include <doctest.h>

#include <utility>
#include <vector>

#include "kmincc/generators.hpp"
#include "kmincc/ptas.hpp"
#include "kmincc/stats.hpp"
#include "test_util.hpp"

using namespace kmincc;

TEST_CASE("greedy extension joins the unanimously attracting block") {
    const Partition truth = partition_from_blocks(6, {{0, 1, 2}, {3, 4, 5}});
    const Instance inst = build_instance({truth, truth});
    const std::vector<Element> sample{0, 3};
    const std::vector<std::int32_t> labels{0, 1};
    const Partition ext = greedy_extend(inst, sample, labels, 2);
    CHECK(ext == truth);
}

TEST_CASE("greedy extension on the worked example") {
    // sample {0,3} split into singletons: element 1 joins 0's block (cost 0
    // against the sample pairs) rather than 3's (cost 4).
    const Instance inst = testutil::running_example();
    const std::vector<Element> sample{0, 3};
    const std::vector<std::int32_t> labels{0, 1};
    const Partition ext = greedy_extend(inst, sample, labels, 2);
    CHECK(ext.co_clustered(0, 1));
    CHECK_FALSE(ext.co_clustered(1, 3));
}

TEST_CASE("greedy extension can open one block beyond the sample's") {
    // both inputs separate 4 and 5 from the sampled elements entirely
    const Partition p1 = partition_from_blocks(6, {{0, 1}, {2, 3}, {4, 5}});
    const Partition p2 = partition_from_blocks(6, {{0, 1}, {2, 3}, {4}, {5}});
    const Instance inst = build_instance({p1, p2});
    const std::vector<Element> sample{0, 2};
    const std::vector<std::int32_t> labels{0, 1};
    const Partition ext = greedy_extend(inst, sample, labels, 3);
    CHECK(ext.block_count() == 3);
    CHECK(ext.co_clustered(4, 5));
    CHECK_FALSE(ext.co_clustered(0, 4));
    CHECK_FALSE(ext.co_clustered(2, 4));
}

TEST_CASE("greedy extension validation") {
    const Instance inst = testutil::running_example();
    CHECK_THROWS_WITH_AS(greedy_extend(inst, {}, {}, 2), "empty sample", std::invalid_argument);
}

TEST_CASE("argmin cost block equals argmax agreement block") {
    Rng rng(91);
    int checked = 0;
    while (checked < 500) {
        const Element n = 4 + static_cast<Element>(rng.next_below(9));
        const std::int32_t l = 1 + static_cast<std::int32_t>(rng.next_below(4));
        const std::int32_t k = 2 + static_cast<std::int32_t>(rng.next_below(2));
        const Instance inst = testutil::random_instance(rng, n, l, k);

        // random sample of distinct elements, plus one element outside it
        const std::size_t sample_size = 2 + rng.next_below(4);
        std::vector<Element> pool(static_cast<std::size_t>(n));
        for (Element i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        rng.shuffle(pool);
        if (pool.size() < sample_size + 1) continue;
        std::vector<Element> sample(pool.begin(), pool.begin() + static_cast<long>(sample_size));
        const Element u = pool[sample_size];
        std::sort(sample.begin(), sample.end());
        std::vector<std::int32_t> sample_labels;
        Partition sp = testutil::random_partition(rng, static_cast<Element>(sample_size),
                                                  std::min<std::int32_t>(k, static_cast<std::int32_t>(sample_size)));
        sample_labels = sp.labels();

        const std::int32_t used = sp.block_count();
        const std::int32_t targets = std::min(used + 1, std::max(used, k));

        // cost route via the public pair-set cost
        std::int32_t argmin_cost = -1;
        Cost best_cost = 0;
        for (std::int32_t b = 0; b < targets; ++b) {
            std::vector<std::int32_t> raw(static_cast<std::size_t>(n));
            std::int32_t fresh = targets;  // unrelated elements become singletons
            for (Element e = 0; e < n; ++e) raw[static_cast<std::size_t>(e)] = fresh++;
            for (std::size_t i = 0; i < sample.size(); ++i)
                raw[static_cast<std::size_t>(sample[i])] = sample_labels[i];
            raw[static_cast<std::size_t>(u)] = b;
            const Partition candidate = canonicalize(raw);
            std::vector<std::pair<Element, Element>> pairs;
            for (Element e : sample) pairs.emplace_back(u, e);
            const Cost c = pair_set_cost(candidate, inst, pairs);
            if (argmin_cost < 0 || c < best_cost) {
                best_cost = c;
                argmin_cost = b;
            }
        }

        // agreement route: compare exact numerators (common denominator)
        std::int32_t argmax_val = -1;
        std::int64_t best_num = -1;
        for (std::int32_t b = 0; b < targets; ++b) {
            const AgreementProfile moved =
                moved_agreement_profile(inst, sample, sample_labels, u, b);
            const std::int64_t num = moved.agreement_num();
            if (num > best_num) {
                best_num = num;
                argmax_val = b;
            }
        }

        CHECK(argmin_cost == argmax_val);
        ++checked;
    }
}

TEST_CASE("large/small split on the worked examples") {
    SUBCASE("balanced blocks are all large") {
        const Partition p = partition_from_blocks(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
        const SplitReport report = split_large_small(p, 4);
        CHECK(report.large_blocks.size() == 4);
        CHECK(report.small_blocks.empty());
        CHECK(report.merged_small.empty());
    }
    SUBCASE("a single block dominates") {
        const SplitReport report = split_large_small(one_block_partition(9), 3);
        CHECK(report.large_blocks == std::vector<std::int32_t>{0});
        CHECK(report.merged_small.empty());
    }
    SUBCASE("sizes 7 and 3 with threshold 2.5 are both large") {
        const Partition p = partition_from_blocks(10, {{0, 1, 2, 3, 4, 5, 6}, {7, 8, 9}});
        const SplitReport report = split_large_small(p, 2);
        CHECK(report.large_blocks.size() == 2);
        CHECK(report.merged_small.empty());
    }
    SUBCASE("blocks below the threshold merge in element order") {
        const Partition p = partition_from_blocks(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8}, {9, 11}, {10}});
        const SplitReport report = split_large_small(p, 2);  // threshold 3
        CHECK(report.large_blocks == std::vector<std::int32_t>{0});
        CHECK(report.small_blocks == std::vector<std::int32_t>{1, 2});
        CHECK(report.merged_small == std::vector<Element>{9, 10, 11});
    }
}

TEST_CASE("engine: forced single block") {
    Rng rng(92);
    const Instance inst = testutil::random_instance(rng, 9, 3, 3);
    PtasParams params;
    params.k = 1;
    const PtasResult result = ptas_solve(inst, params);
    CHECK(result.solution.partition == one_block_partition(9));
    Cost expected = 0;
    for (Element i = 0; i < 9; ++i)
        for (Element j = i + 1; j < 9; ++j) expected += inst.sep_count(i, j);
    CHECK(result.solution.cost == expected);
    CHECK(result.path == SolverPath::exact);
}

TEST_CASE("engine: exhaustive base case fires on the worked example") {
    const Instance inst = testutil::running_example();
    PtasParams params;
    params.k = 2;
    params.seed = 99;
    const PtasResult result = ptas_solve(inst, params);
    CHECK(result.solution.cost == 3);
    CHECK(result.path == SolverPath::exact);
}

TEST_CASE("engine recovers a noise-free planted instance with the base case off") {
    const PlantedInstance planted = gen_planted(PlantedSpec{20, 3, 2, 0.0, 4});
    PtasParams params;
    params.k = 2;
    params.epsilon = 0.5;
    params.seed = 4;
    params.exact_cap = 4;  // force the sampling branch at n=20
    const PtasResult result = ptas_solve(planted.instance, params);
    CHECK(result.solution.cost == 0);
    CHECK(result.solution.partition == planted.truth);
    CHECK_FALSE(result.path == SolverPath::exact);
}

TEST_CASE("engine matches the exact solver on small instances") {
    Rng rng(93);
    for (int round = 0; round < 60; ++round) {
        const Element n = 2 + static_cast<Element>(rng.next_below(7));
        const std::int32_t l = 1 + static_cast<std::int32_t>(rng.next_below(4));
        const std::int32_t k = 1 + static_cast<std::int32_t>(rng.next_below(3));
        const Instance inst = testutil::random_instance(rng, n, l, 4);
        PtasParams params;
        params.k = k;
        params.seed = rng.next();
        const PtasResult result = ptas_solve(inst, params);
        CHECK(result.solution.cost == solve_exact(inst, k).cost);
    }
}

TEST_CASE("engine is deterministic given identical parameters") {
    const PlantedInstance planted = gen_planted(PlantedSpec{24, 3, 2, 0.15, 11});
    PtasParams params;
    params.k = 2;
    params.epsilon = 0.5;
    params.seed = 31337;
    params.exact_cap = 8;
    const PtasResult a = ptas_solve(planted.instance, params);
    const PtasResult b = ptas_solve(planted.instance, params);
    CHECK(a.solution.cost == b.solution.cost);
    CHECK(a.solution.partition == b.solution.partition);
    CHECK(a.path == b.path);
    CHECK(a.solution.partition.block_count() <= 2);
    CHECK(cost_of(a.solution.partition, planted.instance) == a.solution.cost);
}

TEST_CASE("engine honors a pluggable dense solver") {
    const PlantedInstance planted = gen_planted(PlantedSpec{18, 3, 2, 0.1, 3});
    int calls = 0;
    PtasParams params;
    params.k = 2;
    params.seed = 5;
    params.exact_cap = 4;
    params.dense_solver = [&calls](const Instance& inst, std::int32_t k, std::uint64_t seed) {
        ++calls;
        return local_search_solve(inst, k, seed, 2);
    };
    const PtasResult result = ptas_solve(planted.instance, params);
    CHECK(calls >= 1);
    CHECK(result.solution.partition.block_count() <= 2);
}

TEST_CASE("an exhausted candidate budget falls back to the dense path") {
    const PlantedInstance planted = gen_planted(PlantedSpec{20, 3, 2, 0.1, 8});
    PtasParams params;
    params.k = 2;
    params.seed = 8;
    params.exact_cap = 4;
    params.candidate_budget = 0;  // nothing can be processed
    const PtasResult result = ptas_solve(planted.instance, params);
    CHECK(result.budget_fallback);
    CHECK(result.path == SolverPath::dense);
    CHECK(cost_of(result.solution.partition, planted.instance) == result.solution.cost);
}

TEST_CASE("sample size caps keep the candidate count within budget") {
    // floor(log_k(budget)) draws: k^draws <= budget
    CHECK(detail::effective_sample_size(1e-9, 1000, 2, 1'000'000) == 19);
    CHECK(detail::effective_sample_size(1e-9, 1000, 3, 1'000'000) == 12);
    CHECK(detail::effective_sample_size(1e-9, 10, 2, 1'000'000) == 10);  // capped by n
    CHECK(detail::effective_sample_size(0.9, 3, 2, 1'000'000) == 3);
}
