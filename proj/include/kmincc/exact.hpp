#pragma once

// Brute-force references: optimal bounded-cluster consensus by exhaustive
// enumeration, and minimum graph bisection over all balanced splits.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kmincc/enumeration.hpp"
#include "kmincc/errors.hpp"
#include "kmincc/instance.hpp"

namespace kmincc {

// Optimal at-most-k-block partition by exhaustive search over canonical
// label arrays, walked depth-first in lexicographic order with incremental
// prefix costs. Ties go to the lexicographically smallest label array, which
// is the first minimum encountered. Prefix cost is monotone, so subtrees at
// or above the incumbent cost cannot improve on it and are skipped; the
// result is identical to the unpruned scan.
inline Solution solve_exact(const Instance& inst, std::int32_t k,
                            std::uint64_t budget = kDefaultEnumerationBudget) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const Element n = inst.size();
    if (!enumeration_feasible(n, k, budget)) throw BudgetError("enumeration budget exceeded");

    if (k == 1) {  // forced; skip the depth-n walk
        Partition whole = one_block_partition(n);
        const Cost cost = cost_pairwise(whole, inst);
        return Solution{std::move(whole), cost, 1};
    }

    const std::int32_t kmax = std::min<std::int32_t>(k, n);
    const std::int32_t l = inst.partition_count();
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> best_labels;
    Cost best_cost = std::numeric_limits<Cost>::max();

    // block_delta[depth * kmax + b]: cost adjustment for joining block b.
    std::vector<Cost> block_delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(kmax), 0);

    auto walk = [&](auto&& self, Element i, std::int32_t used, Cost cost) -> void {
        if (cost >= best_cost) return;
        if (i == n) {
            best_cost = cost;
            best_labels = labels;
            return;
        }
        Cost* delta = block_delta.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(kmax);
        std::fill(delta, delta + used, 0);
        const std::uint16_t* row = inst.count_row(i);
        Cost alone = 0;  // cost of i's pairs if i sits in its own new block
        for (Element j = 0; j < i; ++j) {
            const std::int32_t c = row[j];
            alone += c;
            delta[labels[static_cast<std::size_t>(j)]] += l - 2 * c;
        }
        const std::int32_t limit = std::min<std::int32_t>(used + 1, kmax);
        for (std::int32_t b = 0; b < limit; ++b) {
            labels[static_cast<std::size_t>(i)] = b;
            const Cost extra = alone + (b < used ? delta[b] : 0);
            self(self, i + 1, std::max(used, b + 1), cost + extra);
        }
        labels[static_cast<std::size_t>(i)] = 0;
    };
    walk(walk, 0, 0, 0);

    return Solution{canonicalize(best_labels), best_cost, k};
}

// ---------------------------------------------------------------------------
// Minimum bisection
// ---------------------------------------------------------------------------

struct Graph {
    std::int32_t vertex_count = 0;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;  // normalized u < v, sorted
};

inline Graph make_graph(std::int32_t vertex_count,
                        std::vector<std::pair<std::int32_t, std::int32_t>> edges) {
    if (vertex_count < 2 || vertex_count % 2 != 0)
        throw std::invalid_argument("MIN-BIS requires even n");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    return Graph{vertex_count, std::move(edges)};
}

struct Bisection {
    std::vector<std::uint8_t> side;  // exactly vertex_count/2 entries set
    std::int64_t cut = 0;
};

inline std::int64_t cut_size(const Graph& g, const std::vector<std::uint8_t>& side) {
    std::int64_t cut = 0;
    for (const auto& [u, v] : g.edges)
        cut += side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)];
    return cut;
}

// Visits one representative side array per balanced split (vertex 0 pinned to
// side 0; the complement split is equivalent), in lexicographic order of the
// side array.
template <typename Visit>
void for_each_balanced_split(std::int32_t vertex_count, Visit&& visit) {
    if (vertex_count < 2 || vertex_count % 2 != 0)
        throw std::invalid_argument("MIN-BIS requires even n");
    std::vector<std::uint8_t> side(static_cast<std::size_t>(vertex_count), 0);
    auto place = [&](auto&& self, std::int32_t pos, std::int32_t zeros_left,
                     std::int32_t ones_left) -> void {
        if (pos == vertex_count) {
            visit(static_cast<const std::vector<std::uint8_t>&>(side));
            return;
        }
        if (zeros_left > 0) {
            side[static_cast<std::size_t>(pos)] = 0;
            self(self, pos + 1, zeros_left - 1, ones_left);
        }
        if (ones_left > 0) {
            side[static_cast<std::size_t>(pos)] = 1;
            self(self, pos + 1, zeros_left, ones_left - 1);
            side[static_cast<std::size_t>(pos)] = 0;
        }
    };
    // vertex 0 fixed on side 0
    side[0] = 0;
    place(place, 1, vertex_count / 2 - 1, vertex_count / 2);
}

// Minimum-cut balanced split by enumeration; deterministic lexicographic
// tie-break on the side array (the returned representative has side[0] = 0,
// which is also the lexicographically smallest optimal array overall).
inline Bisection solve_min_bisection(const Graph& g, std::int32_t vertex_cap = 20) {
    if (g.vertex_count > vertex_cap) throw BudgetError("bisection cap exceeded");
    Bisection best;
    best.cut = std::numeric_limits<std::int64_t>::max();
    for_each_balanced_split(g.vertex_count, [&](const std::vector<std::uint8_t>& side) {
        const std::int64_t cut = cut_size(g, side);
        if (cut < best.cut) {
            best.cut = cut;
            best.side = side;
        }
    });
    return best;
}

}  // namespace kmincc
