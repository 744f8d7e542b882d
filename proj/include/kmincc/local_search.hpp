#pragma once

// Seeded multi-start local search over at-most-k-block labelings: from a
// uniform random start, repeatedly apply the best single-element move by
// exact cost delta until no move improves, keeping the best local optimum
// across restarts. This is the engine's solver for instances too large to
// enumerate; it carries no approximation guarantee.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kmincc/instance.hpp"
#include "kmincc/rng.hpp"

namespace kmincc {

inline constexpr std::int32_t kDefaultLocalSearchRestarts = 20;

inline Solution local_search_solve(const Instance& inst, std::int32_t k, std::uint64_t seed,
                                   std::int32_t restarts = kDefaultLocalSearchRestarts) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (restarts < 1) throw std::invalid_argument("restarts must be positive");
    const Element n = inst.size();
    const std::int32_t l = inst.partition_count();
    Rng rng(seed);

    std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
    std::vector<Cost> pull(static_cast<std::size_t>(k));  // per-block attraction of one element
    Partition best_partition;
    Cost best_cost = std::numeric_limits<Cost>::max();

    for (std::int32_t r = 0; r < restarts; ++r) {
        for (Element i = 0; i < n; ++i)
            labels[static_cast<std::size_t>(i)] =
                static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(k)));

        Cost cost = 0;
        for (Element i = 0; i < n; ++i) {
            const std::uint16_t* row = inst.count_row(i);
            for (Element j = i + 1; j < n; ++j) {
                const std::int32_t c = row[j];
                cost += (labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)])
                            ? (l - c)
                            : c;
            }
        }

        for (;;) {
            Cost best_delta = 0;
            Element move_element = -1;
            std::int32_t move_block = -1;
            for (Element u = 0; u < n; ++u) {
                // pull[b] = sum over x in block b, x != u, of (l - 2 s(u,x));
                // moving u from block a to b changes the cost by pull[b] - pull[a].
                std::fill(pull.begin(), pull.end(), 0);
                const std::uint16_t* row = inst.count_row(u);
                for (Element x = 0; x < n; ++x) {
                    if (x == u) continue;
                    pull[static_cast<std::size_t>(labels[static_cast<std::size_t>(x)])] +=
                        l - 2 * static_cast<std::int32_t>(row[x]);
                }
                const Cost here = pull[static_cast<std::size_t>(labels[static_cast<std::size_t>(u)])];
                for (std::int32_t b = 0; b < k; ++b) {
                    if (b == labels[static_cast<std::size_t>(u)]) continue;
                    const Cost delta = pull[static_cast<std::size_t>(b)] - here;
                    if (delta < best_delta) {
                        best_delta = delta;
                        move_element = u;
                        move_block = b;
                    }
                }
            }
            if (move_element < 0) break;
            labels[static_cast<std::size_t>(move_element)] = move_block;
            cost += best_delta;
        }

        Partition candidate = canonicalize(labels);
        if (cost < best_cost || (cost == best_cost && candidate.labels() < best_partition.labels())) {
            best_cost = cost;
            best_partition = std::move(candidate);
        }
    }
    return Solution{std::move(best_partition), best_cost, k};
}

}  // namespace kmincc
