#pragma once

// A consensus-clustering instance: l input partitions over one universe plus
// the dense pairwise co-clustering count matrix, and the two equivalent cost
// functions for a candidate partition.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kmincc/partition.hpp"

namespace kmincc {

class Instance {
public:
    Instance() = default;

    Element size() const { return n_; }
    std::int32_t partition_count() const { return l_; }
    const std::vector<Partition>& partitions() const { return partitions_; }

    // Number of input partitions that co-cluster the pair (i, j).
    std::int32_t co_count(Element i, Element j) const {
        return counts_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(j)];
    }
    // Number of input partitions that separate the pair; co + sep == l always.
    std::int32_t sep_count(Element i, Element j) const { return l_ - co_count(i, j); }

    // Raw row of the co-clustering count matrix, for solver inner loops.
    const std::uint16_t* count_row(Element i) const {
        return counts_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_);
    }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.n_ == b.n_ && a.partitions_ == b.partitions_;
    }

private:
    friend Instance build_instance(std::vector<Partition> parts);

    Element n_ = 0;
    std::int32_t l_ = 0;
    std::vector<Partition> partitions_;
    std::vector<std::uint16_t> counts_;  // n x n, symmetric, diagonal = l
};

inline Instance build_instance(std::vector<Partition> parts) {
    if (parts.empty()) throw std::invalid_argument("no partitions");
    const Element n = parts.front().size();
    for (const auto& p : parts)
        if (p.size() != n) throw std::invalid_argument("universe mismatch");
    if (parts.size() > 65535) throw std::invalid_argument("too many partitions");

    Instance inst;
    inst.n_ = n;
    inst.l_ = static_cast<std::int32_t>(parts.size());
    inst.counts_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (Element i = 0; i < n; ++i)
        inst.counts_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(inst.l_);

    std::vector<std::vector<Element>> blocks;
    for (const auto& p : parts) {
        blocks.assign(static_cast<std::size_t>(p.block_count()), {});
        for (Element e = 0; e < n; ++e) blocks[static_cast<std::size_t>(p.label(e))].push_back(e);
        for (const auto& block : blocks) {
            for (std::size_t a = 0; a < block.size(); ++a) {
                for (std::size_t b = a + 1; b < block.size(); ++b) {
                    const std::size_t i = static_cast<std::size_t>(block[a]);
                    const std::size_t j = static_cast<std::size_t>(block[b]);
                    ++inst.counts_[i * static_cast<std::size_t>(n) + j];
                    ++inst.counts_[j * static_cast<std::size_t>(n) + i];
                }
            }
        }
    }
    inst.partitions_ = std::move(parts);
    return inst;
}

// Total disagreement of a candidate with the inputs: the sum of symmetric
// difference distances to every input partition.
inline Cost cost_of(const Partition& candidate, const Instance& inst) {
    if (candidate.size() != inst.size()) throw std::invalid_argument("universe mismatch");
    Cost total = 0;
    for (const auto& p : inst.partitions()) total += pair_distance(candidate, p);
    return total;
}

// Same cost computed per pair from the count matrix: a co-clustered pair
// contributes the number of inputs separating it, a separated pair the number
// of inputs joining it. Must agree with cost_of exactly.
inline Cost cost_pairwise(const Partition& candidate, const Instance& inst) {
    if (candidate.size() != inst.size()) throw std::invalid_argument("universe mismatch");
    const Element n = inst.size();
    const std::int32_t l = inst.partition_count();
    Cost total = 0;
    for (Element i = 0; i < n; ++i) {
        const std::uint16_t* row = inst.count_row(i);
        const std::int32_t li = candidate.label(i);
        for (Element j = i + 1; j < n; ++j) {
            const std::int32_t c = row[j];
            total += (candidate.label(j) == li) ? (l - c) : c;
        }
    }
    return total;
}

// Pairwise cost restricted to an explicit pair set.
inline Cost pair_set_cost(const Partition& candidate, const Instance& inst,
                          std::span<const std::pair<Element, Element>> pairs) {
    if (candidate.size() != inst.size()) throw std::invalid_argument("universe mismatch");
    const std::int32_t l = inst.partition_count();
    Cost total = 0;
    for (const auto& [i, j] : pairs) {
        if (i < 0 || i >= inst.size() || j < 0 || j >= inst.size())
            throw std::invalid_argument("pair index out of range");
        if (i == j) throw std::invalid_argument("pair of identical elements");
        const std::int32_t c = inst.co_count(i, j);
        total += candidate.co_clustered(i, j) ? (l - c) : c;
    }
    return total;
}

// Solution to the bounded-cluster consensus problem: a candidate with at most
// k blocks and its exact cost against the instance it solves.
struct Solution {
    Partition partition;
    Cost cost = 0;
    std::int32_t k = 0;
};

// Sub-instance over a subset of the universe (restriction of every input).
inline Instance restrict_instance(const Instance& inst, std::span<const Element> elements) {
    std::vector<Partition> restricted;
    restricted.reserve(inst.partitions().size());
    for (const auto& p : inst.partitions()) restricted.push_back(restrict_partition(p, elements));
    return build_instance(std::move(restricted));
}

}  // namespace kmincc
