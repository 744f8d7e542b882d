#pragma once

// Per-element agreement statistics used by the sampling engine: level-wise
// agreement profiles of an element against a (possibly partial) clustering,
// profiles after a hypothetical move, deviation between a full clustering and
// its restriction to a sample, and the low-agreement element set.
//
// A profile counts, for each level j in [0, l], the pairs (u, x) over the
// context on which exactly j of the l input partitions agree with the
// clustering's verdict for that pair. All counts are exact integers over the
// common denominator |context \ {u}|, so comparisons can avoid floating
// point.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kmincc/instance.hpp"

namespace kmincc {

struct AgreementProfile {
    Element element = -1;
    std::int32_t levels = 0;                  // l
    std::int64_t context_size = 0;            // |A \ {u}|
    std::vector<std::int64_t> level_counts;   // index j in [0, l]

    double fraction(std::int32_t j) const {
        return static_cast<double>(level_counts[static_cast<std::size_t>(j)]) /
               static_cast<double>(context_size);
    }
    // Weighted agreement as an exact rational num/den in [0, 1].
    std::int64_t agreement_num() const {
        std::int64_t num = 0;
        for (std::int32_t j = 0; j <= levels; ++j)
            num += static_cast<std::int64_t>(j) * level_counts[static_cast<std::size_t>(j)];
        return num;
    }
    std::int64_t agreement_den() const { return context_size * levels; }
    double agreement() const {
        return static_cast<double>(agreement_num()) / static_cast<double>(agreement_den());
    }
};

namespace detail {

// Core profile computation. co_label selects which context elements count as
// co-clustered with u; nullopt means none (u outside every block).
inline AgreementProfile profile_core(const Instance& inst, std::span<const Element> elements,
                                     std::span<const std::int32_t> labels, Element u,
                                     std::optional<std::int32_t> co_label) {
    if (elements.size() != labels.size())
        throw std::invalid_argument("element/label arity mismatch");
    AgreementProfile prof;
    prof.element = u;
    prof.levels = inst.partition_count();
    prof.level_counts.assign(static_cast<std::size_t>(prof.levels) + 1, 0);
    const std::uint16_t* row = inst.count_row(u);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Element x = elements[i];
        if (x < 0 || x >= inst.size()) throw std::invalid_argument("context element out of range");
        if (x == u) continue;
        const std::int32_t co = row[x];
        const std::int32_t level =
            (co_label && labels[i] == *co_label) ? co : (prof.levels - co);
        ++prof.level_counts[static_cast<std::size_t>(level)];
        ++prof.context_size;
    }
    if (prof.context_size == 0) throw std::invalid_argument("empty context");
    return prof;
}

}  // namespace detail

// Profile of u against a clustering of a context set. If u belongs to the
// context its own block is used; otherwise u is treated as co-clustered with
// nothing, so every pair counts at the separation level.
inline AgreementProfile agreement_profile(const Instance& inst, std::span<const Element> elements,
                                          std::span<const std::int32_t> labels, Element u) {
    std::optional<std::int32_t> co_label;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == u) {
            co_label = labels[i];
            break;
        }
    return detail::profile_core(inst, elements, labels, u, co_label);
}

inline AgreementProfile agreement_profile(const Instance& inst, const Partition& p, Element u) {
    std::vector<Element> elements(static_cast<std::size_t>(p.size()));
    for (Element i = 0; i < p.size(); ++i) elements[static_cast<std::size_t>(i)] = i;
    return agreement_profile(inst, elements, p.labels(), u);
}

// Profile of u after moving it into target_block (u need not belong to the
// context; target_block may be one past the last block, i.e. a new block).
inline AgreementProfile moved_agreement_profile(const Instance& inst,
                                                std::span<const Element> elements,
                                                std::span<const std::int32_t> labels, Element u,
                                                std::int32_t target_block) {
    std::int32_t max_label = -1;
    for (auto lbl : labels) max_label = std::max(max_label, lbl);
    if (target_block < 0 || target_block > max_label + 1)
        throw std::invalid_argument("invalid block index");
    return detail::profile_core(inst, elements, labels, u, target_block);
}

inline AgreementProfile moved_agreement_profile(const Instance& inst, const Partition& p,
                                                Element u, std::int32_t target_block) {
    std::vector<Element> elements(static_cast<std::size_t>(p.size()));
    for (Element i = 0; i < p.size(); ++i) elements[static_cast<std::size_t>(i)] = i;
    return moved_agreement_profile(inst, elements, p.labels(), u, target_block);
}

// ---------------------------------------------------------------------------
// Sample fidelity
// ---------------------------------------------------------------------------

struct DeviationReport {
    double max_deviation = 0.0;
    bool within = true;
};

// Largest level-wise profile deviation between a reference clustering of the
// whole universe and a clustering of a sample, over every element u of the
// universe, every level j, and every target block i in [0, k). The sample
// labels must use the reference's block numbering so blocks correspond.
inline DeviationReport sample_deviation(const Instance& inst, const Partition& reference,
                                        std::span<const Element> sample_elements,
                                        std::span<const std::int32_t> sample_labels,
                                        std::int32_t k, double beta) {
    if (sample_elements.size() != sample_labels.size())
        throw std::invalid_argument("element/label arity mismatch");
    std::vector<char> seen(static_cast<std::size_t>(inst.size()), 0);
    for (auto e : sample_elements) {
        if (e < 0 || e >= inst.size() || seen[static_cast<std::size_t>(e)])
            throw std::invalid_argument("sample not a subset");
        seen[static_cast<std::size_t>(e)] = 1;
    }

    std::vector<Element> all(static_cast<std::size_t>(inst.size()));
    for (Element i = 0; i < inst.size(); ++i) all[static_cast<std::size_t>(i)] = i;

    std::int32_t sample_max = -1;
    for (auto lbl : sample_labels) sample_max = std::max(sample_max, lbl);

    DeviationReport report;
    for (Element u = 0; u < inst.size(); ++u) {
        for (std::int32_t i = 0; i < k; ++i) {
            // Targets beyond the last existing block are all the same empty
            // block; clamp so the move stays well-formed on both sides.
            const std::int32_t ref_target = std::min(i, reference.block_count());
            const std::int32_t sam_target = std::min(i, sample_max + 1);
            const AgreementProfile ref =
                moved_agreement_profile(inst, reference, u, ref_target);
            const AgreementProfile sam =
                moved_agreement_profile(inst, sample_elements, sample_labels, u, sam_target);
            for (std::int32_t j = 0; j <= inst.partition_count(); ++j) {
                const double dev = std::abs(ref.fraction(j) - sam.fraction(j));
                report.max_deviation = std::max(report.max_deviation, dev);
            }
        }
    }
    report.within = report.max_deviation <= beta;
    return report;
}

// Elements whose agreement with the given clustering is at most
// 1 - 1/(20 k^2); the comparison is exact via cross-multiplication.
inline std::vector<Element> low_agreement_set(const Instance& inst, const Partition& p,
                                              std::int32_t k) {
    const std::int64_t scale = 20LL * k * k;
    std::vector<Element> low;
    for (Element u = 0; u < inst.size(); ++u) {
        const AgreementProfile prof = agreement_profile(inst, p, u);
        // agreement <= 1 - 1/scale  <=>  num * scale <= den * (scale - 1)
        if (prof.agreement_num() * scale <= prof.agreement_den() * (scale - 1)) low.push_back(u);
    }
    return low;
}

// ---------------------------------------------------------------------------
// Sampling constants
// ---------------------------------------------------------------------------

inline double default_beta(double epsilon, std::int32_t k) {
    const double k4 = static_cast<double>(k) * k * k * k;
    return epsilon / (128.0 * 400.0 * k4);
}

// Alternative slack with an explicit dependence on the number of inputs.
inline double l_dependent_beta(double epsilon, std::int32_t k, std::int32_t l) {
    return epsilon / (20.0 * 160.0 * k * k * l);
}

// Sample size 500 ln(n) / beta^2 that makes a random sample faithful with
// high probability. Far too large to run literally; exposed for
// documentation and capped by the engine.
inline double fidelity_sample_size(double beta, Element n) {
    return 500.0 * std::log(static_cast<double>(n)) / (beta * beta);
}

// The companion bound 2560000 k^4 ln(n) / epsilon^2, likewise documentation
// only.
inline double fidelity_sample_size_alt(double epsilon, std::int32_t k, Element n) {
    const double k4 = static_cast<double>(k) * k * k * k;
    return 2560000.0 * k4 * std::log(static_cast<double>(n)) / (epsilon * epsilon);
}

}  // namespace kmincc
