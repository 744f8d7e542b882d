#pragma once

// Streaming enumeration of canonical set partitions as restricted-growth
// strings, with a Stirling-number feasibility check against a candidate
// budget.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kmincc/errors.hpp"
#include "kmincc/partition.hpp"

namespace kmincc {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 20'000'000;

// Sum of Stirling numbers of the second kind S(n, j) for j = 1..max_blocks,
// i.e. the number of canonical partitions of n elements into at most
// max_blocks blocks. Saturates instead of overflowing.
inline std::uint64_t partition_count_up_to(Element n, std::int32_t max_blocks) {
    if (n < 1 || max_blocks < 1) throw std::invalid_argument("n and max_blocks must be positive");
    constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
    const std::int32_t k = std::min<std::int32_t>(max_blocks, n);

    // row[j] = S(i, j), built up over i = 1..n
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[1] = 1;
    for (Element i = 2; i <= n; ++i) {
        for (std::int32_t j = std::min<std::int32_t>(k, i); j >= 1; --j) {
            const std::uint64_t keep = row[static_cast<std::size_t>(j)];
            const std::uint64_t grow = row[static_cast<std::size_t>(j) - 1];
            std::uint64_t v;
            if (keep != 0 && keep > kSat / static_cast<std::uint64_t>(j)) {
                v = kSat;
            } else {
                v = keep * static_cast<std::uint64_t>(j);
                v = (v > kSat - grow) ? kSat : v + grow;
            }
            row[static_cast<std::size_t>(j)] = v;
        }
        row[0] = 0;
    }
    std::uint64_t total = 0;
    for (std::int32_t j = 1; j <= k; ++j) {
        const std::uint64_t s = row[static_cast<std::size_t>(j)];
        total = (s > kSat - total) ? kSat : total + s;
    }
    return total;
}

inline bool enumeration_feasible(Element n, std::int32_t max_blocks, std::uint64_t budget) {
    return partition_count_up_to(n, max_blocks) <= budget;
}

// Budgeted enumeration: visits every canonical partition of [0, n) with at
// most max_blocks blocks, or throws before visiting anything when the count
// exceeds the budget.
template <typename Visit>
std::uint64_t for_each_partition(Element n, std::int32_t max_blocks, std::uint64_t budget,
                                 Visit&& visit);

// Yields every canonical partition of [0, n) with at most max_blocks blocks
// exactly once, in lexicographic order of the label array, using constant
// memory per step.
//
//   PartitionEnumerator e(n, k);
//   while (e.next()) use(e.labels());
class PartitionEnumerator {
public:
    PartitionEnumerator(Element n, std::int32_t max_blocks)
        : labels_(static_cast<std::size_t>(n), 0),
          prefix_max_(static_cast<std::size_t>(n), 0),
          top_label_(std::min<std::int32_t>(max_blocks, n) - 1) {
        if (n < 1 || max_blocks < 1) throw std::invalid_argument("n and max_blocks must be positive");
    }

    bool next() {
        if (first_) {
            first_ = false;
            return true;
        }
        const std::size_t n = labels_.size();
        for (std::size_t i = n; i-- > 1;) {
            if (labels_[i] <= prefix_max_[i - 1] && labels_[i] < top_label_) {
                ++labels_[i];
                prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
                for (std::size_t j = i + 1; j < n; ++j) {
                    labels_[j] = 0;
                    prefix_max_[j] = prefix_max_[j - 1];
                }
                return true;
            }
        }
        return false;
    }

    const std::vector<std::int32_t>& labels() const { return labels_; }

private:
    std::vector<std::int32_t> labels_;
    std::vector<std::int32_t> prefix_max_;
    std::int32_t top_label_;
    bool first_ = true;
};

template <typename Visit>
std::uint64_t for_each_partition(Element n, std::int32_t max_blocks, std::uint64_t budget,
                                 Visit&& visit) {
    if (!enumeration_feasible(n, max_blocks, budget))
        throw BudgetError("enumeration budget exceeded");
    PartitionEnumerator e(n, max_blocks);
    std::uint64_t count = 0;
    while (e.next()) {
        visit(e.labels());
        ++count;
    }
    return count;
}

}  // namespace kmincc
