// Command line front end: single experiments, 3x3 parameter sweeps, and the
// twelve-row best-parameter comparison table.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cgbench/harness.hpp"

namespace {

using namespace cgbench;

void print_cells(const ExperimentResult& result) {
    std::cout << "function: " << result.config.function << "\n";
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
        const auto& cell = result.cells[i];
        std::cout << "  cell " << i << " [" << algorithm_name(cell.params.algorithm)
                  << " set=" << cell.params.clone_set_index;
        if (cell.params.algorithm == Algorithm::clonalg)
            std::cout << " group=" << cell.params.mutation_group_index;
        else
            std::cout << " rate=" << cell.params.ga_mutation_rate;
        std::cout << "] mean_iterations=" << cell.stats.mean_iterations
                  << " mean_proximity=" << cell.stats.mean_proximity
                  << " converged=" << cell.stats.convergence_rate << "\n";
    }
    if (result.best_cell)
        std::cout << "  best cell: " << *result.best_cell << "\n";
    else
        std::cout << "  best cell: none (no fully converged cell)\n";
}

int run_command(const std::string& function, const std::string& algorithm, int clone_set_idx,
                std::optional<int> mutation_group_idx, std::optional<double> ga_rate_opt,
                std::optional<double> epsilon, long max_generations, std::uint64_t seed,
                int runs, const std::string& out, const std::string& trace_dir) {
    const Algorithm alg = parse_algorithm(algorithm);
    CellParams params;
    params.algorithm = alg;
    params.clone_set_index = clone_set_idx;
    if (alg == Algorithm::clonalg) {
        if (ga_rate_opt) throw CLI::ValidationError("--ga-mutation-rate requires --algorithm ga");
        params.mutation_group_index = mutation_group_idx.value_or(1);
    } else {
        if (mutation_group_idx)
            throw CLI::ValidationError("--mutation-group requires --algorithm clonalg");
        params.ga_mutation_rate = ga_rate_opt.value_or(0.005);
    }

    ExperimentConfig cfg;
    cfg.function = function;
    cfg.grid = {params};
    cfg.runs_per_cell = runs;
    cfg.epsilon = epsilon;
    cfg.max_generations = max_generations;
    cfg.seed = seed;
    if (!trace_dir.empty()) cfg.trace_dir = trace_dir;

    const ExperimentResult result = run_experiment(cfg);
    print_cells(result);
    if (!out.empty()) write_results(result, out);
    return 0;
}

int sweep_command(const std::string& function, const std::string& algorithm, std::uint64_t seed,
                  const std::string& out) {
    if (algorithm == "both") {
        const ExperimentResult cl = sweep(function, Algorithm::clonalg, seed);
        const ExperimentResult ga = sweep(function, Algorithm::ga, seed);
        print_cells(cl);
        print_cells(ga);
        if (!out.empty()) {
            std::ofstream os(out);
            if (!os) throw IoError("cannot open output file " + out);
            nlohmann::json j{{"clonalg", result_to_json(cl)}, {"ga", result_to_json(ga)}};
            os << j.dump(2) << '\n';
            if (!os) throw IoError("write failed for " + out);
        }
        return 0;
    }
    const ExperimentResult result = sweep(function, parse_algorithm(algorithm), seed);
    print_cells(result);
    if (!out.empty()) write_results(result, out);
    return 0;
}

int table2_command(std::uint64_t seed, const std::string& out, const std::string& format) {
    const auto rows = emit_table2(seed);
    if (out.empty()) {
        if (format == "json")
            std::cout << table2_to_json(rows).dump(2) << '\n';
        else
            write_table2_csv(std::cout, rows);
        return 0;
    }
    std::ofstream os(out);
    if (!os) throw IoError("cannot open output file " + out);
    if (format == "json")
        os << table2_to_json(rows).dump(2) << '\n';
    else
        write_table2_csv(os, rows);
    if (!os) throw IoError("write failed for " + out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clonal selection vs genetic algorithm benchmark harness"};
    app.require_subcommand(1);

    std::string function, algorithm, out, trace_dir, format = "csv";
    int clone_set_idx = 1, runs = 10;
    std::optional<int> mutation_group_idx;
    std::optional<double> ga_rate_opt, epsilon;
    long max_generations = 1'000'000;
    std::uint64_t seed = 0;

    auto* run_cmd = app.add_subcommand("run", "run one parameter cell, several seeded runs");
    run_cmd->add_option("--function", function)->required();
    run_cmd->add_option("--algorithm", algorithm)->required()
        ->check(CLI::IsMember({"clonalg", "ga"}));
    run_cmd->add_option("--clone-set", clone_set_idx)->required()->check(CLI::Range(1, 3));
    run_cmd->add_option("--mutation-group", mutation_group_idx)->check(CLI::Range(1, 3));
    run_cmd->add_option("--ga-mutation-rate", ga_rate_opt);
    run_cmd->add_option("--epsilon", epsilon);
    run_cmd->add_option("--max-generations", max_generations);
    run_cmd->add_option("--seed", seed)->required();
    run_cmd->add_option("--runs", runs);
    run_cmd->add_option("--out", out);
    run_cmd->add_option("--trace-dir", trace_dir);

    auto* sweep_cmd = app.add_subcommand("sweep", "full 3x3 clone-set x mutation sweep");
    sweep_cmd->add_option("--function", function)->required();
    sweep_cmd->add_option("--algorithm", algorithm)->required()
        ->check(CLI::IsMember({"clonalg", "ga", "both"}));
    sweep_cmd->add_option("--seed", seed)->required();
    sweep_cmd->add_option("--out", out);

    auto* table2_cmd =
        app.add_subcommand("table2", "best-parameter comparison over all six functions");
    table2_cmd->add_option("--seed", seed)->required();
    table2_cmd->add_option("--out", out);
    table2_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* list_cmd = app.add_subcommand("list-functions", "list benchmark identifiers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(run_cmd))
            return run_command(function, algorithm, clone_set_idx, mutation_group_idx,
                               ga_rate_opt, epsilon, max_generations, seed, runs, out,
                               trace_dir);
        if (app.got_subcommand(sweep_cmd)) return sweep_command(function, algorithm, seed, out);
        if (app.got_subcommand(table2_cmd)) return table2_command(seed, out, format);
        if (app.got_subcommand(list_cmd)) {
            for (const auto& spec : cgbench::all_benchmarks())
                std::cout << spec.name << "\t" << cgbench::modality_label(spec.modality) << "\t["
                          << spec.bounds.lo << ", " << spec.bounds.hi << "]\n";
            return 0;
        }
    } catch (const cgbench::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
