#pragma once

// Seeded generators for planted and uniform-random consensus instances and
// for random graphs. All draw orders are pinned; identical seeds give
// identical outputs everywhere.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kmincc/exact.hpp"
#include "kmincc/instance.hpp"
#include "kmincc/rng.hpp"

namespace kmincc {

struct PlantedSpec {
    Element n = 0;
    std::int32_t l = 0;
    std::int32_t k = 0;
    double noise = 0.0;  // per-element relabel probability
    std::uint64_t seed = 0;
};

struct PlantedInstance {
    Instance instance;
    Partition truth;
};

// Ground truth: balanced round-robin block sizes, element order shuffled by
// the seed. Each input partition copies the truth, then every element is
// independently reassigned to a uniform random block with the noise
// probability (the draw may land on its current block).
//
// Draw order: the shuffle first, then per partition and per element one
// double for the noise decision followed, when it fires, by one block draw.
inline PlantedInstance gen_planted(const PlantedSpec& spec) {
    if (spec.n < 1 || spec.l < 1 || spec.k < 1) throw std::invalid_argument("invalid planted spec");
    if (spec.k > spec.n) throw std::invalid_argument("k exceeds element count");
    if (spec.noise < 0.0 || spec.noise > 1.0) throw std::invalid_argument("noise must be in [0,1]");

    Rng rng(spec.seed);
    std::vector<std::int32_t> truth_labels(static_cast<std::size_t>(spec.n));
    for (Element i = 0; i < spec.n; ++i)
        truth_labels[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i % spec.k);
    rng.shuffle(truth_labels);

    std::vector<Partition> parts;
    parts.reserve(static_cast<std::size_t>(spec.l));
    std::vector<std::int32_t> labels(static_cast<std::size_t>(spec.n));
    for (std::int32_t t = 0; t < spec.l; ++t) {
        labels = truth_labels;
        for (Element i = 0; i < spec.n; ++i) {
            if (rng.next_double() < spec.noise)
                labels[static_cast<std::size_t>(i)] =
                    static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(spec.k)));
        }
        parts.push_back(canonicalize(labels));
    }
    return PlantedInstance{build_instance(std::move(parts)), canonicalize(truth_labels)};
}

// l independent uniform labelings over [0, max_blocks), canonicalized.
inline Instance gen_random_partitions(Element n, std::int32_t l, std::int32_t max_blocks,
                                      std::uint64_t seed) {
    if (n < 1 || l < 1) throw std::invalid_argument("invalid instance shape");
    if (max_blocks < 1) throw std::invalid_argument("max_blocks must be positive");
    Rng rng(seed);
    std::vector<Partition> parts;
    parts.reserve(static_cast<std::size_t>(l));
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
    for (std::int32_t t = 0; t < l; ++t) {
        for (Element i = 0; i < n; ++i)
            labels[static_cast<std::size_t>(i)] =
                static_cast<std::int32_t>(rng.next_below(static_cast<std::uint64_t>(max_blocks)));
        parts.push_back(canonicalize(labels));
    }
    return build_instance(std::move(parts));
}

// Erdos-Renyi graph: each pair (i, j), i < j in ascending order, draws one
// double and keeps the edge when it falls below p. Even n only, since these
// graphs feed the bisection reduction.
inline Graph gen_gnp(std::int32_t n, double p, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("MIN-BIS requires even n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (std::int32_t i = 0; i < n; ++i)
        for (std::int32_t j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.emplace_back(i, j);
    return make_graph(n, std::move(edges));
}

}  // namespace kmincc
