// Command-line front end for the bounded-cluster consensus clustering
// toolkit. Exit codes: 0 success, 1 input or usage error, 2 candidate budget
// exceeded. The CONSENSUS_BUDGET environment variable overrides the default
// enumeration budget for every subcommand.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kmincc/kmincc.hpp"

namespace {

std::uint64_t enumeration_budget_from_env() {
    const char* env = std::getenv("CONSENSUS_BUDGET");
    if (!env || !*env) return kmincc::kDefaultEnumerationBudget;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0)
        throw std::runtime_error("invalid CONSENSUS_BUDGET value");
    return static_cast<std::uint64_t>(value);
}

void print_solution(const kmincc::Solution& sol) {
    std::cout << "cost=" << sol.cost << '\n';
    for (kmincc::Element i = 0; i < sol.partition.size(); ++i) {
        if (i > 0) std::cout << ' ';
        std::cout << sol.partition.label(i);
    }
    std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kmincc: solvers, generators and benchmarks for consensus "
                 "clustering with a bounded number of output clusters"};
    app.require_subcommand(1);

    // --- solve-exact ---
    std::string in_path, out_path, candidate_path, graph_path, truth_path, cross_path;
    std::int32_t k = 2;
    auto* solve_exact_cmd = app.add_subcommand("solve-exact", "optimal solution by enumeration");
    solve_exact_cmd->add_option("--in", in_path, "instance file")->required();
    solve_exact_cmd->add_option("--k", k, "maximum number of output blocks")->required();

    // --- solve-ptas ---
    double epsilon = 0.5;
    std::uint64_t seed = 0;
    std::optional<std::int32_t> sample_size;
    std::optional<kmincc::Element> exact_cap;
    std::optional<double> beta_override;
    std::uint64_t candidate_budget = 1'000'000;
    std::int32_t restarts = kmincc::kDefaultLocalSearchRestarts;
    bool l_dependent_beta = false;
    auto* solve_ptas_cmd = app.add_subcommand("solve-ptas", "sampling-based approximation engine");
    solve_ptas_cmd->add_option("--in", in_path, "instance file")->required();
    solve_ptas_cmd->add_option("--k", k, "maximum number of output blocks")->required();
    solve_ptas_cmd->add_option("--epsilon", epsilon, "accuracy parameter in (0,1]");
    solve_ptas_cmd->add_option("--seed", seed, "RNG seed");
    solve_ptas_cmd->add_option("--sample-size", sample_size, "explicit sample draw count");
    solve_ptas_cmd->add_option("--candidate-budget", candidate_budget,
                               "max sample partitions evaluated");
    solve_ptas_cmd->add_option("--exact-cap", exact_cap, "max n for the exhaustive base case");
    solve_ptas_cmd->add_option("--restarts", restarts, "dense-path local search restarts");
    solve_ptas_cmd->add_option("--beta", beta_override, "override the goodness slack");
    solve_ptas_cmd->add_flag("--l-dependent-beta", l_dependent_beta,
                             "use the input-count-dependent slack variant");

    // --- solve-greedy ---
    auto* solve_greedy_cmd =
        app.add_subcommand("solve-greedy", "multi-start local search alone");
    solve_greedy_cmd->add_option("--in", in_path, "instance file")->required();
    solve_greedy_cmd->add_option("--k", k, "maximum number of output blocks")->required();
    solve_greedy_cmd->add_option("--seed", seed, "RNG seed");
    solve_greedy_cmd->add_option("--restarts", restarts, "local search restarts");

    // --- eval ---
    auto* eval_cmd = app.add_subcommand("eval", "cost of a candidate partition file");
    eval_cmd->add_option("--in", in_path, "instance file")->required();
    eval_cmd->add_option("--candidate", candidate_path,
                         "candidate file (instance format; first partition used)")
        ->required();

    // --- gen-random ---
    kmincc::Element n = 10;
    std::int32_t l = 3, max_blocks = 3;
    auto* gen_random_cmd = app.add_subcommand("gen-random", "uniform random instance");
    gen_random_cmd->add_option("--n", n, "universe size")->required();
    gen_random_cmd->add_option("--l", l, "number of input partitions")->required();
    gen_random_cmd->add_option("--max-blocks", max_blocks, "blocks per input upper bound")
        ->required();
    gen_random_cmd->add_option("--seed", seed, "RNG seed");
    gen_random_cmd->add_option("--out", out_path, "output instance file")->required();

    // --- gen-planted ---
    double noise = 0.1;
    auto* gen_planted_cmd = app.add_subcommand("gen-planted", "noisy planted instance");
    gen_planted_cmd->add_option("--n", n, "universe size")->required();
    gen_planted_cmd->add_option("--l", l, "number of input partitions")->required();
    gen_planted_cmd->add_option("--k", k, "planted block count")->required();
    gen_planted_cmd->add_option("--noise", noise, "per-element relabel probability");
    gen_planted_cmd->add_option("--seed", seed, "RNG seed");
    gen_planted_cmd->add_option("--out", out_path, "output instance file")->required();
    gen_planted_cmd->add_option("--truth-out", truth_path,
                                "also write the planted partition (instance format, l=1)");

    // --- gen-gnp ---
    double edge_prob = 0.5;
    auto* gen_gnp_cmd = app.add_subcommand("gen-gnp", "Erdos-Renyi random graph");
    gen_gnp_cmd->add_option("--n", n, "vertex count (even)")->required();
    gen_gnp_cmd->add_option("--p", edge_prob, "edge probability")->required();
    gen_gnp_cmd->add_option("--seed", seed, "RNG seed");
    gen_gnp_cmd->add_option("--out", out_path, "output graph file")->required();

    // --- gen-reduction ---
    std::optional<std::int64_t> anchor_size, light_size;
    auto* gen_reduction_cmd =
        app.add_subcommand("gen-reduction", "bisection hardness gadget instance");
    gen_reduction_cmd->add_option("--graph", graph_path, "source graph file")->required();
    gen_reduction_cmd->add_option("--out", out_path, "output instance file (+ .prov sidecar)")
        ->required();
    gen_reduction_cmd->add_option("--anchor-size", anchor_size,
                                  "per-vertex anchor set size (default n^4)");
    gen_reduction_cmd->add_option("--light-size", light_size,
                                  "per-vertex light set size (default n)");

    // --- verify-reduction ---
    std::int32_t bisection_cap = 20;
    auto* verify_cmd =
        app.add_subcommand("verify-reduction", "check the cut/cost correspondence");
    verify_cmd->add_option("--graph", graph_path, "source graph file")->required();
    verify_cmd->add_option("--in", cross_path,
                           "optional generated instance file to cross-check");
    verify_cmd->add_option("--cap", bisection_cap, "max vertices for bisection enumeration");
    verify_cmd->add_option("--anchor-size", anchor_size,
                           "per-vertex anchor set size (default n^4)");
    verify_cmd->add_option("--light-size", light_size,
                           "per-vertex light set size (default n)");

    // --- bench ---
    std::int32_t trials = 10;
    std::uint64_t seed0 = 0;
    auto* bench_cmd = app.add_subcommand("bench", "planted-instance benchmark, CSV output");
    bench_cmd->add_option("--trials", trials, "number of trials")->required();
    bench_cmd->add_option("--n", n, "universe size")->required();
    bench_cmd->add_option("--l", l, "number of input partitions")->required();
    bench_cmd->add_option("--k", k, "maximum number of output blocks")->required();
    bench_cmd->add_option("--epsilon", epsilon, "accuracy parameter");
    bench_cmd->add_option("--noise", noise, "per-element relabel probability");
    bench_cmd->add_option("--seed0", seed0, "seed of the first trial");
    bench_cmd->add_option("--out", out_path, "output CSV file")->required();
    bench_cmd->add_option("--exact-cap", exact_cap, "max n for the engine's exhaustive base case");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const std::uint64_t budget = enumeration_budget_from_env();

        if (solve_exact_cmd->parsed()) {
            const kmincc::Instance inst = kmincc::parse_instance_file(in_path);
            print_solution(kmincc::solve_exact(inst, k, budget));
        } else if (solve_ptas_cmd->parsed()) {
            const kmincc::Instance inst = kmincc::parse_instance_file(in_path);
            kmincc::PtasParams params;
            params.k = k;
            params.epsilon = epsilon;
            params.seed = seed;
            params.sample_override = sample_size;
            params.candidate_budget = candidate_budget;
            params.enumeration_budget = budget;
            params.exact_cap = exact_cap;
            params.dense_restarts = restarts;
            params.beta_override = beta_override;
            params.use_l_dependent_beta = l_dependent_beta;
            const kmincc::PtasResult result = kmincc::ptas_solve(inst, params);
            if (result.budget_fallback)
                std::cerr << "warning: candidate budget exhausted before any sample partition; "
                             "returned the dense-path result\n";
            print_solution(result.solution);
        } else if (solve_greedy_cmd->parsed()) {
            const kmincc::Instance inst = kmincc::parse_instance_file(in_path);
            print_solution(kmincc::local_search_solve(inst, k, seed, restarts));
        } else if (eval_cmd->parsed()) {
            const kmincc::Instance inst = kmincc::parse_instance_file(in_path);
            const kmincc::Instance cand = kmincc::parse_instance_file(candidate_path);
            if (cand.size() != inst.size()) throw std::runtime_error("universe mismatch");
            std::cout << "cost=" << kmincc::cost_of(cand.partitions().front(), inst) << '\n';
        } else if (gen_random_cmd->parsed()) {
            kmincc::write_instance_file(out_path,
                                        kmincc::gen_random_partitions(n, l, max_blocks, seed));
            std::cout << "wrote " << out_path << '\n';
        } else if (gen_planted_cmd->parsed()) {
            const kmincc::PlantedInstance planted =
                kmincc::gen_planted(kmincc::PlantedSpec{n, l, k, noise, seed});
            kmincc::write_instance_file(out_path, planted.instance);
            if (!truth_path.empty())
                kmincc::write_instance_file(truth_path,
                                            kmincc::build_instance({planted.truth}));
            std::cout << "wrote " << out_path << '\n';
        } else if (gen_gnp_cmd->parsed()) {
            kmincc::write_graph_file(out_path, kmincc::gen_gnp(n, edge_prob, seed));
            std::cout << "wrote " << out_path << '\n';
        } else if (gen_reduction_cmd->parsed()) {
            const kmincc::Graph g = kmincc::parse_graph_file(graph_path);
            const std::int64_t nv = g.vertex_count;
            const kmincc::ReductionArtifact art = kmincc::build_reduction(
                g, anchor_size.value_or(nv * nv * nv * nv), light_size.value_or(nv));
            kmincc::write_reduction_files(out_path, art);
            std::cout << "wrote " << out_path << " and " << out_path << ".prov (universe "
                      << art.instance.size() << ", " << art.edge_pairs.size()
                      << " edge pairs)\n";
        } else if (verify_cmd->parsed()) {
            const kmincc::Graph g = kmincc::parse_graph_file(graph_path);
            const std::int64_t nv = g.vertex_count;
            const kmincc::ReductionArtifact art = kmincc::build_reduction(
                g, anchor_size.value_or(nv * nv * nv * nv), light_size.value_or(nv));
            if (!cross_path.empty()) {
                const kmincc::Instance on_disk = kmincc::parse_instance_file(cross_path);
                if (!(on_disk == art.instance))
                    throw std::runtime_error("instance file does not match the rebuilt artifact");
            }
            const kmincc::CutCostReport report =
                kmincc::verify_cut_cost_correspondence(art, bisection_cap);
            std::cout << "bisections=" << report.points.size() << " edges=" << g.edges.size()
                      << " affine-base=" << report.affine_base << '\n';
            std::cout << "slope-check: " << (report.slope_ok ? "PASS" : "FAIL") << '\n';
            std::cout << "argmin-check: " << (report.argmin_ok ? "PASS" : "FAIL") << '\n';
            if (!report.slope_ok || !report.argmin_ok) return 1;
        } else if (bench_cmd->parsed()) {
            kmincc::BenchConfig cfg;
            cfg.trials = trials;
            cfg.n = n;
            cfg.l = l;
            cfg.k = k;
            cfg.epsilon = epsilon;
            cfg.noise = noise;
            cfg.seed0 = seed0;
            cfg.enumeration_budget = budget;
            cfg.exact_cap = exact_cap;
            const kmincc::BenchResult result = kmincc::run_bench(cfg);
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
            out << result.csv();
            if (!out) throw std::runtime_error("write failed for '" + out_path + "'");
            std::cout << result.summary(epsilon) << '\n';
        }
    } catch (const kmincc::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
