#pragma once

// Set partitions of a universe [0, n) in canonical first-appearance form,
// and the symmetric difference distance between two partitions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace kmincc {

using Element = std::int32_t;
using Cost = std::int64_t;

// Canonical form: blocks are numbered by first appearance, so labels[0] == 0
// and every new label is exactly one more than the maximum seen before it.
// Two label arrays describing the same set partition compare equal.
class Partition {
public:
    Partition() = default;

    Element size() const { return static_cast<Element>(labels_.size()); }
    std::int32_t block_count() const { return block_count_; }
    std::int32_t label(Element e) const { return labels_[static_cast<std::size_t>(e)]; }
    const std::vector<std::int32_t>& labels() const { return labels_; }

    bool co_clustered(Element i, Element j) const {
        return labels_[static_cast<std::size_t>(i)] == labels_[static_cast<std::size_t>(j)];
    }

    std::vector<std::int64_t> block_sizes() const {
        std::vector<std::int64_t> sizes(static_cast<std::size_t>(block_count_), 0);
        for (auto lbl : labels_) ++sizes[static_cast<std::size_t>(lbl)];
        return sizes;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Partition(std::vector<std::int32_t> labels, std::int32_t block_count)
        : labels_(std::move(labels)), block_count_(block_count) {}

    template <typename Label>
    friend Partition canonicalize(std::span<const Label> raw);

    std::vector<std::int32_t> labels_;
    std::int32_t block_count_ = 0;
};

// Renumber an arbitrary labeling by first appearance. The entries may be any
// comparable tokens; only their equality structure matters.
template <typename Label>
Partition canonicalize(std::span<const Label> raw) {
    if (raw.empty()) throw std::invalid_argument("empty universe");
    std::vector<std::int32_t> labels(raw.size());
    std::map<Label, std::int32_t> first_seen;
    std::int32_t next = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, inserted] = first_seen.try_emplace(raw[i], next);
        if (inserted) ++next;
        labels[i] = it->second;
    }
    return Partition(std::move(labels), next);
}

inline Partition canonicalize(const std::vector<std::int32_t>& raw) {
    return canonicalize(std::span<const std::int32_t>(raw));
}

inline Partition canonicalize(const std::vector<std::int64_t>& raw) {
    return canonicalize(std::span<const std::int64_t>(raw));
}

inline Partition one_block_partition(Element n) {
    return canonicalize(std::vector<std::int32_t>(static_cast<std::size_t>(n), 0));
}

inline Partition singleton_partition(Element n) {
    std::vector<std::int32_t> raw(static_cast<std::size_t>(n));
    for (Element i = 0; i < n; ++i) raw[static_cast<std::size_t>(i)] = i;
    return canonicalize(raw);
}

// Build a partition from an explicit block list covering [0, n) exactly once.
inline Partition partition_from_blocks(Element n, const std::vector<std::vector<Element>>& blocks) {
    std::vector<std::int32_t> raw(static_cast<std::size_t>(n), -1);
    std::int32_t next = 0;
    for (const auto& block : blocks) {
        for (Element e : block) {
            if (e < 0 || e >= n) throw std::invalid_argument("block element out of range");
            if (raw[static_cast<std::size_t>(e)] != -1) throw std::invalid_argument("element in two blocks");
            raw[static_cast<std::size_t>(e)] = next;
        }
        ++next;
    }
    for (auto lbl : raw)
        if (lbl == -1) throw std::invalid_argument("element in no block");
    return canonicalize(raw);
}

// Number of element pairs co-clustered in exactly one of the two partitions.
// Computed through the contingency counts: d = |P_a| + |P_b| - 2|P_a ∩ P_b|
// where P_x is the set of co-clustered pairs of x.
inline Cost pair_distance(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("universe mismatch");
    const std::size_t n = static_cast<std::size_t>(a.size());

    auto within_pairs = [](const std::vector<std::int64_t>& sizes) {
        std::int64_t total = 0;
        for (auto s : sizes) total += s * (s - 1) / 2;
        return total;
    };

    std::vector<std::int64_t> keys(n);
    for (std::size_t i = 0; i < n; ++i)
        keys[i] = static_cast<std::int64_t>(a.labels()[i]) * b.block_count() + b.labels()[i];
    std::sort(keys.begin(), keys.end());

    std::int64_t both = 0;
    std::size_t run_start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || keys[i] != keys[run_start]) {
            const std::int64_t run = static_cast<std::int64_t>(i - run_start);
            both += run * (run - 1) / 2;
            run_start = i;
        }
    }
    return within_pairs(a.block_sizes()) + within_pairs(b.block_sizes()) - 2 * both;
}

// Restriction of a partition to a subset of the universe, renumbered
// canonically over the subset's positions.
inline Partition restrict_partition(const Partition& p, std::span<const Element> elements) {
    std::vector<std::int32_t> raw(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 0 || elements[i] >= p.size())
            throw std::invalid_argument("restriction element out of range");
        raw[i] = p.label(elements[i]);
    }
    return canonicalize(raw);
}

}  // namespace kmincc
