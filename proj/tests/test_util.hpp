#pragma once

// Shared helpers for the test suites: brute-force oracles kept independent
// of the library code paths they check, and small random input factories.

#include <cstdint>
#include <utility>
#include <vector>

#include "kmincc/instance.hpp"
#include "kmincc/partition.hpp"
#include "kmincc/rng.hpp"

namespace testutil {

// Pair-by-pair symmetric difference count, the oracle for pair_distance.
inline std::int64_t pair_distance_oracle(const kmincc::Partition& a, const kmincc::Partition& b) {
    std::int64_t count = 0;
    for (kmincc::Element i = 0; i < a.size(); ++i)
        for (kmincc::Element j = i + 1; j < a.size(); ++j)
            if (a.co_clustered(i, j) != b.co_clustered(i, j)) ++count;
    return count;
}

inline std::int64_t cost_oracle(const kmincc::Partition& candidate, const kmincc::Instance& inst) {
    std::int64_t total = 0;
    for (const auto& p : inst.partitions()) total += pair_distance_oracle(candidate, p);
    return total;
}

inline kmincc::Partition random_partition(kmincc::Rng& rng, kmincc::Element n,
                                          std::int32_t max_blocks) {
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
    for (auto& lbl : labels)
        lbl = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(max_blocks)));
    return kmincc::canonicalize(labels);
}

inline kmincc::Instance random_instance(kmincc::Rng& rng, kmincc::Element n, std::int32_t l,
                                        std::int32_t max_blocks) {
    std::vector<kmincc::Partition> parts;
    parts.reserve(static_cast<std::size_t>(l));
    for (std::int32_t t = 0; t < l; ++t) parts.push_back(random_partition(rng, n, max_blocks));
    return kmincc::build_instance(std::move(parts));
}

// The worked example used across the suites:
//   pi1 = {{0,1},{2,3}}, pi2 = {{0,1,2},{3}}.
inline kmincc::Instance running_example() {
    return kmincc::build_instance({kmincc::partition_from_blocks(4, {{0, 1}, {2, 3}}),
                                   kmincc::partition_from_blocks(4, {{0, 1, 2}, {3}})});
}

}  // namespace testutil
