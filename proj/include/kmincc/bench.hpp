#pragma once

// Seeded benchmark harness: one planted instance per trial (seeds
// seed0..seed0+trials-1), exact optimum when the enumeration budget allows,
// the sampling engine always, emitted as deterministic CSV.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "kmincc/enumeration.hpp"
#include "kmincc/exact.hpp"
#include "kmincc/generators.hpp"
#include "kmincc/instance.hpp"
#include "kmincc/ptas.hpp"

namespace kmincc {

inline constexpr const char* kBenchCsvHeader =
    "seed,n,l,k,epsilon,generator,exact_cost,ptas_cost,ratio,exact_ms,ptas_ms,solver_path";

struct BenchConfig {
    std::int32_t trials = 1;
    Element n = 10;
    std::int32_t l = 3;
    std::int32_t k = 2;
    double epsilon = 0.5;
    double noise = 0.1;
    std::uint64_t seed0 = 0;

    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    std::uint64_t candidate_budget = 1'000'000;
    std::optional<Element> exact_cap;  // forwarded to the engine
};

struct ExperimentRecord {
    std::uint64_t seed = 0;
    Element n = 0;
    std::int32_t l = 0;
    std::int32_t k = 0;
    double epsilon = 0.0;
    std::string generator;
    std::optional<Cost> exact_cost;  // absent when enumeration exceeds budget
    Cost ptas_cost = 0;
    std::int64_t exact_ms = 0;
    std::int64_t ptas_ms = 0;
    std::string solver_path;

    bool both_zero() const { return exact_cost && *exact_cost == 0 && ptas_cost == 0; }
    bool ratio_defined() const { return exact_cost && *exact_cost > 0; }
    double ratio() const {
        return static_cast<double>(ptas_cost) / static_cast<double>(*exact_cost);
    }
};

namespace detail {

inline std::string format_fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

}  // namespace detail

inline std::string csv_row(const ExperimentRecord& r) {
    std::string row;
    row += std::to_string(r.seed);
    row += ',' + std::to_string(r.n);
    row += ',' + std::to_string(r.l);
    row += ',' + std::to_string(r.k);
    row += ',' + detail::format_fixed6(r.epsilon);
    row += ',' + r.generator;
    row += ',';
    if (r.exact_cost) row += std::to_string(*r.exact_cost);
    row += ',' + std::to_string(r.ptas_cost);
    row += ',';
    if (r.both_zero())
        row += "both-zero";
    else if (r.ratio_defined())
        row += detail::format_fixed6(r.ratio());
    row += ',' + std::to_string(r.exact_ms);
    row += ',' + std::to_string(r.ptas_ms);
    row += ',' + r.solver_path;
    return row;
}

struct BenchResult {
    std::vector<ExperimentRecord> records;
    std::int32_t achieved = 0;    // trials with ratio <= 1+epsilon (both-zero counts)
    std::int32_t with_exact = 0;  // trials where the exact optimum was computed

    std::string csv() const {
        std::string out = kBenchCsvHeader;
        out += '\n';
        for (const auto& r : records) {
            out += csv_row(r);
            out += '\n';
        }
        return out;
    }

    std::string summary(double epsilon) const {
        std::string s = "summary: " + std::to_string(achieved) + "/" + std::to_string(with_exact) +
                        " trials with a known optimum achieved ratio <= " +
                        detail::format_fixed6(1.0 + epsilon);
        if (with_exact == 0) s += " (no trials within the enumeration budget)";
        return s;
    }
};

inline BenchResult run_bench(const BenchConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be positive");
    BenchResult result;
    const bool exact_feasible = enumeration_feasible(cfg.n, cfg.k, cfg.enumeration_budget);
    const std::string generator = "planted(n=" + std::to_string(cfg.n) +
                                  ",l=" + std::to_string(cfg.l) + ",k=" + std::to_string(cfg.k) +
                                  ",noise=" + detail::format_fixed6(cfg.noise) + ")";

    for (std::int32_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = cfg.seed0 + static_cast<std::uint64_t>(t);
        PlantedInstance planted =
            gen_planted(PlantedSpec{cfg.n, cfg.l, cfg.k, cfg.noise, seed});

        ExperimentRecord rec;
        rec.seed = seed;
        rec.n = cfg.n;
        rec.l = cfg.l;
        rec.k = cfg.k;
        rec.epsilon = cfg.epsilon;
        rec.generator = generator;

        using Clock = std::chrono::steady_clock;
        if (exact_feasible) {
            const auto t0 = Clock::now();
            rec.exact_cost = solve_exact(planted.instance, cfg.k, cfg.enumeration_budget).cost;
            rec.exact_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        }

        PtasParams params;
        params.k = cfg.k;
        params.epsilon = cfg.epsilon;
        params.seed = seed;
        params.candidate_budget = cfg.candidate_budget;
        params.enumeration_budget = cfg.enumeration_budget;
        params.exact_cap = cfg.exact_cap;
        const auto t1 = Clock::now();
        PtasResult ptas = ptas_solve(planted.instance, params);
        rec.ptas_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t1).count();
        rec.ptas_cost = ptas.solution.cost;
        rec.solver_path = to_string(ptas.path);

        if (rec.exact_cost) {
            ++result.with_exact;
            const bool ok = rec.both_zero() ||
                            (rec.ratio_defined() &&
                             static_cast<double>(rec.ptas_cost) <=
                                 (1.0 + cfg.epsilon) * static_cast<double>(*rec.exact_cost));
            if (ok) ++result.achieved;
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

}  // namespace kmincc
