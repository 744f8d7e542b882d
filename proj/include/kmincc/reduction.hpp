#pragma once

// Constructive reduction from minimum bisection to 2-bounded consensus
// clustering on three input partitions, plus an empirical verifier of the
// cut/cost correspondence.
//
// For a graph on n vertices, each vertex i gets a heavy anchor set of n^4
// elements and a light set of n elements. Inputs one and two group each
// vertex's anchor and light sets together; input three keeps every anchor set
// whole and, per edge, pairs up one light element from each endpoint (lowest
// unused index first), leaving the remaining light elements as singletons.
// Across balanced "standard" solutions (those keeping each vertex's gadget
// family intact and splitting families evenly) the solution cost is an
// affine function of the bisection's cut size with slope exactly 2.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kmincc/exact.hpp"
#include "kmincc/instance.hpp"

namespace kmincc {

struct ElementTag {
    enum class Kind : std::uint8_t { anchor, light };  // X-set vs Y-set member
    Kind kind = Kind::anchor;
    std::int32_t vertex = 0;
    std::int64_t index = 0;  // 1-based within the gadget set

    friend bool operator==(const ElementTag&, const ElementTag&) = default;
};

struct ReductionArtifact {
    Graph source;
    Instance instance;                                   // l = 3
    std::vector<ElementTag> provenance;                  // one tag per element
    std::vector<std::pair<Element, Element>> edge_pairs; // aligned with source.edges
    std::int64_t anchor_size = 0;                        // |X_i|, default n^4
    std::int64_t light_size = 0;                         // |Y_i|, default n
};

inline ReductionArtifact build_reduction(const Graph& g, std::int64_t anchor_size,
                                         std::int64_t light_size) {
    const std::int32_t n = g.vertex_count;
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("MIN-BIS requires even n");
    if (anchor_size < 1 || light_size < 1) throw std::invalid_argument("gadget sizes must be positive");

    std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    for (auto d : degree)
        if (d > light_size) throw std::invalid_argument("vertex degree exceeds light gadget size");

    const std::int64_t family = anchor_size + light_size;
    const std::int64_t universe = static_cast<std::int64_t>(n) * family;
    // The instance stores a dense universe^2 count matrix; cap the size so a
    // mistyped graph cannot ask for gigabytes. Larger graphs need scaled-down
    // gadget sizes.
    if (universe > 15000) throw std::invalid_argument("reduction universe too large");
    const auto nn = static_cast<std::size_t>(universe);

    auto anchor_element = [&](std::int32_t vertex, std::int64_t h) {  // h is 1-based
        return static_cast<Element>(vertex * family + (h - 1));
    };
    auto light_element = [&](std::int32_t vertex, std::int64_t h) {
        return static_cast<Element>(vertex * family + anchor_size + (h - 1));
    };

    ReductionArtifact art;
    art.source = g;
    art.anchor_size = anchor_size;
    art.light_size = light_size;
    art.provenance.resize(nn);
    for (std::int32_t v = 0; v < n; ++v) {
        for (std::int64_t h = 1; h <= anchor_size; ++h)
            art.provenance[static_cast<std::size_t>(anchor_element(v, h))] =
                ElementTag{ElementTag::Kind::anchor, v, h};
        for (std::int64_t h = 1; h <= light_size; ++h)
            art.provenance[static_cast<std::size_t>(light_element(v, h))] =
                ElementTag{ElementTag::Kind::light, v, h};
    }

    // Inputs one and two: one block per vertex family.
    std::vector<std::int32_t> family_labels(nn);
    for (std::size_t e = 0; e < nn; ++e)
        family_labels[e] = static_cast<std::int32_t>(static_cast<std::int64_t>(e) / family);
    Partition grouped = canonicalize(family_labels);

    // Input three: whole anchor sets, one two-element block per edge, the
    // rest of the light elements singletons.
    std::vector<std::int32_t> third_labels(nn, -1);
    std::int32_t next_label = 0;
    for (std::int32_t v = 0; v < n; ++v) {
        for (std::int64_t h = 1; h <= anchor_size; ++h)
            third_labels[static_cast<std::size_t>(anchor_element(v, h))] = next_label;
        ++next_label;
    }
    std::vector<std::int64_t> next_unused(static_cast<std::size_t>(n), 1);
    for (const auto& [u, v] : g.edges) {  // edges already sorted (u < v)
        const Element a = light_element(u, next_unused[static_cast<std::size_t>(u)]++);
        const Element b = light_element(v, next_unused[static_cast<std::size_t>(v)]++);
        third_labels[static_cast<std::size_t>(a)] = next_label;
        third_labels[static_cast<std::size_t>(b)] = next_label;
        ++next_label;
        art.edge_pairs.emplace_back(a, b);
    }
    for (std::size_t e = 0; e < nn; ++e)
        if (third_labels[e] == -1) third_labels[e] = next_label++;

    std::vector<Partition> parts;
    parts.push_back(grouped);
    parts.push_back(grouped);
    parts.push_back(canonicalize(third_labels));
    art.instance = build_instance(std::move(parts));
    return art;
}

inline ReductionArtifact build_reduction(const Graph& g) {
    const std::int64_t n = g.vertex_count;
    return build_reduction(g, n * n * n * n, n);
}

// Two-block solution placing each vertex family wholly on its bisection side.
struct StandardSolution {
    Bisection bisection;
    Partition partition;
};

inline StandardSolution standard_solution_of(const ReductionArtifact& art, const Bisection& b) {
    const std::int32_t n = art.source.vertex_count;
    if (static_cast<std::int32_t>(b.side.size()) != n)
        throw std::invalid_argument("bisection size mismatch");
    std::int64_t ones = 0;
    for (auto s : b.side) ones += s ? 1 : 0;
    if (ones != n / 2) throw std::invalid_argument("bisection not balanced");

    const std::int64_t family = art.anchor_size + art.light_size;
    std::vector<std::int32_t> raw(static_cast<std::size_t>(art.instance.size()));
    for (std::size_t e = 0; e < raw.size(); ++e) {
        const auto vertex = static_cast<std::size_t>(static_cast<std::int64_t>(e) / family);
        raw[e] = b.side[vertex] ? 1 : 0;
    }
    return StandardSolution{b, canonicalize(raw)};
}

// Number of edge pairs whose two elements share a block of the solution.
inline std::int64_t co_clustered_edge_pairs(const ReductionArtifact& art, const Partition& sol) {
    if (sol.size() != art.instance.size()) throw std::invalid_argument("universe mismatch");
    std::int64_t count = 0;
    for (const auto& [a, b] : art.edge_pairs) count += sol.co_clustered(a, b) ? 1 : 0;
    return count;
}

// ---------------------------------------------------------------------------
// Cut/cost correspondence
// ---------------------------------------------------------------------------

struct BisectionCostPoint {
    std::vector<std::uint8_t> side;
    std::int64_t cut = 0;
    Cost cost = 0;
};

struct CutCostReport {
    std::vector<BisectionCostPoint> points;  // one per balanced split
    std::int64_t affine_base = 0;            // cost(b) - 2*cut(b), constant when slope_ok
    bool slope_ok = false;
    bool argmin_ok = false;
};

// Measures the standard-solution cost of every balanced bisection and checks
// the affine law cost(b) = base + 2*cut(b) plus agreement of the cut and cost
// minimizers. Constants are measured, never assumed.
inline CutCostReport verify_cut_cost_correspondence(const ReductionArtifact& art,
                                                    std::int32_t vertex_cap = 20) {
    if (art.source.vertex_count > vertex_cap) throw BudgetError("bisection cap exceeded");
    CutCostReport report;
    for_each_balanced_split(art.source.vertex_count, [&](const std::vector<std::uint8_t>& side) {
        Bisection b{side, cut_size(art.source, side)};
        const StandardSolution sol = standard_solution_of(art, b);
        report.points.push_back(
            BisectionCostPoint{side, b.cut, cost_of(sol.partition, art.instance)});
    });

    report.affine_base = report.points.front().cost - 2 * report.points.front().cut;
    report.slope_ok = true;
    for (const auto& p : report.points)
        if (p.cost - 2 * p.cut != report.affine_base) report.slope_ok = false;

    std::int64_t min_cut = report.points.front().cut;
    Cost min_cost = report.points.front().cost;
    for (const auto& p : report.points) {
        min_cut = std::min(min_cut, p.cut);
        min_cost = std::min(min_cost, p.cost);
    }
    std::set<std::size_t> cut_argmin, cost_argmin;
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        if (report.points[i].cut == min_cut) cut_argmin.insert(i);
        if (report.points[i].cost == min_cost) cost_argmin.insert(i);
    }
    report.argmin_ok = cut_argmin == cost_argmin;
    return report;
}

}  // namespace kmincc
