#pragma once

// The sampling-based approximation engine for bounded-cluster consensus.
//
// Dispatch: k = 1 is forced; small universes are solved exhaustively; larger
// ones run both a dense-path solver (pluggable; multi-start local search by
// default) and the sampling path, returning the cheaper result. The sampling
// path draws a seeded sample, enumerates every at-most-k-block partition of
// it, extends each greedily to the whole universe, splits the extension into
// large and small blocks, re-solves the merged small blocks recursively at
// accuracy epsilon/3, and keeps the cheapest assembled candidate.
//
// The approximation guarantee holds when the exhaustive base case fires; on
// larger instances the engine is a principled heuristic because the dense
// path is a local search rather than an additive-error scheme.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kmincc/enumeration.hpp"
#include "kmincc/exact.hpp"
#include "kmincc/instance.hpp"
#include "kmincc/local_search.hpp"
#include "kmincc/rng.hpp"
#include "kmincc/stats.hpp"

namespace kmincc {

struct PtasParams {
    std::int32_t k = 2;
    double epsilon = 0.5;
    std::uint64_t seed = 0;

    // Goodness slack; defaults to epsilon / (128 * 20^2 * k^4), or the
    // l-dependent variant when requested. Only feeds the (capped)
    // theoretical sample size.
    std::optional<double> beta_override;
    bool use_l_dependent_beta = false;

    std::optional<std::int32_t> sample_override;   // explicit draw count
    std::uint64_t candidate_budget = 1'000'000;    // max sample partitions evaluated
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    std::optional<Element> exact_cap;              // max n for the exhaustive base case
    std::int32_t dense_restarts = kDefaultLocalSearchRestarts;

    // Pluggable dense-path solver; when empty, multi-start local search.
    std::function<Solution(const Instance&, std::int32_t, std::uint64_t)> dense_solver;
};

enum class SolverPath { exact, dense, sampled };

inline const char* to_string(SolverPath p) {
    switch (p) {
        case SolverPath::exact: return "exact";
        case SolverPath::dense: return "dense";
        default: return "sampled";
    }
}

struct PtasResult {
    Solution solution;
    SolverPath path = SolverPath::exact;
    bool budget_fallback = false;  // sampling path produced no candidate
};

// ---------------------------------------------------------------------------
// Pieces of the sampling path
// ---------------------------------------------------------------------------

// Extend a partition of a sample to the whole universe: every non-sample
// element independently joins the block whose sample pairs cost least (ties
// to the lowest block index; one empty block beyond the sample's is available
// when fewer than k blocks are used). Equivalently, each element maximizes
// its agreement profile against the sample.
inline Partition greedy_extend(const Instance& inst, std::span<const Element> sample_elements,
                               std::span<const std::int32_t> sample_labels, std::int32_t k) {
    if (sample_elements.empty()) throw std::invalid_argument("empty sample");
    if (sample_elements.size() != sample_labels.size())
        throw std::invalid_argument("element/label arity mismatch");
    const Element n = inst.size();
    const std::int32_t l = inst.partition_count();

    std::int32_t used = 0;
    for (std::size_t i = 0; i < sample_elements.size(); ++i) {
        const Element e = sample_elements[i];
        if (e < 0 || e >= n) throw std::invalid_argument("sample not a subset");
        if (i > 0 && sample_elements[i - 1] >= e)
            throw std::invalid_argument("sample elements must be strictly increasing");
        used = std::max(used, sample_labels[i] + 1);
    }
    const std::int32_t targets = std::min(used + 1, std::max(used, k));

    std::vector<std::int32_t> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < sample_elements.size(); ++i)
        labels[static_cast<std::size_t>(sample_elements[i])] = sample_labels[i];

    std::vector<Cost> block_cost(static_cast<std::size_t>(targets));
    for (Element u = 0; u < n; ++u) {
        if (labels[static_cast<std::size_t>(u)] != -1) continue;
        const std::uint16_t* row = inst.count_row(u);
        // Base: every sample pair separated; joining block b swaps the
        // verdict for b's members.
        Cost base = 0;
        std::fill(block_cost.begin(), block_cost.end(), 0);
        for (std::size_t i = 0; i < sample_elements.size(); ++i) {
            const std::int32_t c = row[sample_elements[i]];
            base += c;
            block_cost[static_cast<std::size_t>(sample_labels[i])] += l - 2 * c;
        }
        std::int32_t pick = 0;
        Cost pick_cost = std::numeric_limits<Cost>::max();
        for (std::int32_t b = 0; b < targets; ++b) {
            const Cost cost = base + block_cost[static_cast<std::size_t>(b)];
            if (cost < pick_cost) {
                pick_cost = cost;
                pick = b;
            }
        }
        labels[static_cast<std::size_t>(u)] = pick;
    }
    return canonicalize(labels);
}

struct SplitReport {
    std::vector<std::int32_t> large_blocks;
    std::vector<std::int32_t> small_blocks;
    std::vector<Element> merged_small;  // union of small blocks, in element order
};

// A block is large when its size is at least n/(2k), compared exactly.
inline SplitReport split_large_small(const Partition& p, std::int32_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const std::int64_t n = p.size();
    SplitReport report;
    std::vector<char> is_small(static_cast<std::size_t>(p.block_count()), 0);
    const auto sizes = p.block_sizes();
    for (std::int32_t b = 0; b < p.block_count(); ++b) {
        if (2LL * k * sizes[static_cast<std::size_t>(b)] >= n) {
            report.large_blocks.push_back(b);
        } else {
            report.small_blocks.push_back(b);
            is_small[static_cast<std::size_t>(b)] = 1;
        }
    }
    for (Element e = 0; e < p.size(); ++e)
        if (is_small[static_cast<std::size_t>(p.label(e))]) report.merged_small.push_back(e);
    return report;
}

namespace detail {

// Draw count per sample: the theoretical bound capped so the partitions of
// the sample fit the candidate budget (k^|S| <= budget) and by n itself.
inline std::int32_t effective_sample_size(double beta, Element n, std::int32_t k,
                                          std::uint64_t candidate_budget) {
    // largest s with k^s <= budget, in integer arithmetic
    std::int64_t by_budget = 0;
    for (std::uint64_t power = 1; power <= candidate_budget / static_cast<std::uint64_t>(k);
         power *= static_cast<std::uint64_t>(k))
        ++by_budget;

    std::int64_t size = std::min<std::int64_t>(n, std::max<std::int64_t>(by_budget, 1));
    const double by_theory = fidelity_sample_size(beta, n);
    if (by_theory < static_cast<double>(size))
        size = std::max<std::int64_t>(static_cast<std::int64_t>(by_theory), 1);
    return static_cast<std::int32_t>(size);
}

inline bool labels_less(const Partition& a, const Partition& b) {
    return a.labels() < b.labels();
}

}  // namespace detail

inline PtasResult ptas_solve(const Instance& inst, const PtasParams& params) {
    const std::int32_t k = params.k;
    if (k < 1) throw std::invalid_argument("k must be positive");
    const Element n = inst.size();
    const std::int32_t l = inst.partition_count();

    if (k == 1) {
        Partition whole = one_block_partition(n);
        const Cost cost = cost_of(whole, inst);
        return PtasResult{Solution{std::move(whole), cost, k}, SolverPath::exact, false};
    }

    const bool under_cap = !params.exact_cap || n <= *params.exact_cap;
    if (n <= 16LL * k * k && under_cap && enumeration_feasible(n, k, params.enumeration_budget))
        return PtasResult{solve_exact(inst, k, params.enumeration_budget), SolverPath::exact, false};

    auto run_dense = [&](const Instance& sub, std::int32_t kk, std::uint64_t seed) {
        return params.dense_solver ? params.dense_solver(sub, kk, seed)
                                   : local_search_solve(sub, kk, seed, params.dense_restarts);
    };

    Solution dense = run_dense(inst, k, derive_seed(params.seed, 0));

    // --- sampling path ---
    const double beta = params.beta_override
                            ? *params.beta_override
                            : (params.use_l_dependent_beta ? l_dependent_beta(params.epsilon, k, l)
                                                           : default_beta(params.epsilon, k));
    const std::int32_t draw_count =
        params.sample_override
            ? std::max<std::int32_t>(*params.sample_override, 1)
            : detail::effective_sample_size(beta, n, k, params.candidate_budget);

    // With replacement, then collapsed: duplicates add nothing to a set
    // partition of the sample.
    Rng rng(derive_seed(params.seed, 1));
    std::vector<Element> sample;
    sample.reserve(static_cast<std::size_t>(draw_count));
    for (std::int32_t i = 0; i < draw_count; ++i)
        sample.push_back(static_cast<Element>(rng.next_below(static_cast<std::uint64_t>(n))));
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());

    std::optional<Solution> sampled;
    std::uint64_t processed = 0;
    PartitionEnumerator sample_partitions(static_cast<Element>(sample.size()), k);
    while (sample_partitions.next()) {
        if (processed == params.candidate_budget) break;
        ++processed;

        Partition extension = greedy_extend(inst, sample, sample_partitions.labels(), k);
        SplitReport split = split_large_small(extension, k);

        Partition candidate;
        if (split.merged_small.empty()) {
            candidate = std::move(extension);
        } else if (split.large_blocks.empty()) {
            // Every block is small, so the merged universe is all of V and
            // recursing would not shrink the problem; use the dense-path
            // solver instead.
            const auto kk = static_cast<std::int32_t>(split.small_blocks.size());
            candidate = run_dense(inst, kk, derive_seed(params.seed, 2 + processed)).partition;
        } else {
            Instance sub = restrict_instance(inst, split.merged_small);
            PtasParams rec = params;
            rec.k = static_cast<std::int32_t>(split.small_blocks.size());
            rec.epsilon = params.epsilon / 3.0;
            rec.seed = derive_seed(params.seed, 2 + processed);
            Partition sub_part = ptas_solve(sub, rec).solution.partition;

            std::vector<std::int32_t> raw(static_cast<std::size_t>(n), -1);
            std::int32_t next = 0;
            for (std::int32_t b : split.large_blocks) {
                for (Element e = 0; e < n; ++e)
                    if (extension.label(e) == b) raw[static_cast<std::size_t>(e)] = next;
                ++next;
            }
            for (std::size_t i = 0; i < split.merged_small.size(); ++i)
                raw[static_cast<std::size_t>(split.merged_small[i])] =
                    next + sub_part.label(static_cast<Element>(i));
            candidate = canonicalize(raw);
        }

        const Cost cost = cost_of(candidate, inst);
        if (!sampled || cost < sampled->cost ||
            (cost == sampled->cost && detail::labels_less(candidate, sampled->partition))) {
            sampled = Solution{std::move(candidate), cost, k};
        }
    }

    if (!sampled) return PtasResult{std::move(dense), SolverPath::dense, true};

    // Better of the two paths; exact ties stay with the dense result.
    if (sampled->cost < dense.cost ||
        (sampled->cost == dense.cost && detail::labels_less(sampled->partition, dense.partition)))
        return PtasResult{std::move(*sampled), SolverPath::sampled, false};
    return PtasResult{std::move(dense), SolverPath::dense, false};
}

}  // namespace kmincc
