#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cgbench/harness.hpp"

using namespace cgbench;

namespace {

ExperimentConfig small_config(const std::string& function, Algorithm alg) {
    ExperimentConfig cfg;
    cfg.function = function;
    CellParams p;
    p.algorithm = alg;
    p.clone_set_index = 2;
    cfg.grid = {p};
    cfg.runs_per_cell = 3;
    cfg.max_generations = 50;
    cfg.seed = 4242;
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("run_experiment produces the requested grid and run counts") {
    ExperimentConfig cfg = small_config("sphere", Algorithm::clonalg);
    cfg.grid = full_grid(Algorithm::clonalg);
    cfg.runs_per_cell = 2;
    cfg.max_generations = 10;
    const ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.cells.size() == 9);
    for (const auto& cell : res.cells) CHECK(cell.runs.size() == 2);
}

TEST_CASE("full_grid covers sets x mutation settings in order") {
    const auto cl = full_grid(Algorithm::clonalg);
    REQUIRE(cl.size() == 9);
    CHECK(cl[0].clone_set_index == 1);
    CHECK(cl[0].mutation_group_index == 1);
    CHECK(cl[8].clone_set_index == 3);
    CHECK(cl[8].mutation_group_index == 3);
    const auto ga = full_grid(Algorithm::ga);
    CHECK(ga[1].ga_mutation_rate == 0.001);
    CHECK(ga[2].ga_mutation_rate == 0.01);
}

TEST_CASE("experiments are deterministic") {
    const ExperimentConfig cfg = small_config("ackley", Algorithm::ga);
    const ExperimentResult a = run_experiment(cfg);
    const ExperimentResult b = run_experiment(cfg);
    CHECK(a == b);
}

TEST_CASE("derived run seeds are pairwise distinct") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t cell = 0; cell < 9; ++cell)
        for (std::uint64_t run = 0; run < 10; ++run)
            seeds.insert(derive_seed(123, cell, run));
    CHECK(seeds.size() == 90);
}

TEST_CASE("aggregates are exact arithmetic means") {
    std::vector<RunRecord> runs{{0, 1, 10, 0.5, true}, {1, 2, 20, 0.25, true}, {2, 3, 31, 1.0, false}};
    const AggregateStats s = aggregate(runs);
    CHECK(s.mean_iterations == (10.0 + 20.0 + 31.0) / 3.0);
    CHECK(s.mean_proximity == (0.5 + 0.25 + 1.0) / 3.0);
    CHECK(s.convergence_rate == 2.0 / 3.0);
    CHECK(s.min_iterations == 10);
    CHECK(s.max_iterations == 31);
    CHECK(s.mean_iterations >= static_cast<double>(s.min_iterations));
    CHECK(s.mean_iterations <= static_cast<double>(s.max_iterations));
}

TEST_CASE("single-run cells pass engine results through unchanged") {
    ExperimentConfig cfg = small_config("sphere", Algorithm::clonalg);
    cfg.runs_per_cell = 1;
    const ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.cells.size() == 1);
    REQUIRE(res.cells[0].runs.size() == 1);
    const RunRecord& rec = res.cells[0].runs[0];

    const AlgorithmConfig rc = make_run_config(cfg.grid[0], lookup("sphere").default_epsilon,
                                               cfg.max_generations, derive_seed(cfg.seed, 0, 0));
    const RunResult direct = run(rc, lookup("sphere"));
    CHECK(rec.iterations == direct.iterations);
    CHECK(rec.best_affinity == direct.best_affinity);
    CHECK(rec.converged == direct.converged);
    CHECK(res.cells[0].stats.mean_iterations == static_cast<double>(direct.iterations));
}

TEST_CASE("best_cell requires full convergence") {
    ExperimentConfig cfg = small_config("sphere", Algorithm::clonalg);
    cfg.max_generations = 2; // cannot reach 1e-6 in two generations
    CHECK_FALSE(run_experiment(cfg).best_cell.has_value());

    cfg.epsilon = 1e9; // everything converges immediately
    cfg.grid = full_grid(Algorithm::clonalg);
    const ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.best_cell.has_value());
    CHECK(res.cells[*res.best_cell].stats.convergence_rate == 1.0);
}

TEST_CASE("summary files round trip and are byte identical") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cgbench_harness_test";
    fs::create_directories(dir);
    const std::string p1 = (dir / "a.json").string();
    const std::string p2 = (dir / "b.json").string();

    const ExperimentConfig cfg = small_config("schwefel-2-22", Algorithm::ga);
    const ExperimentResult res = run_experiment(cfg);
    write_results(res, p1);
    write_results(run_experiment(cfg), p2);

    CHECK(slurp(p1) == slurp(p2));
    const ExperimentResult back = read_results(p1);
    CHECK(back == res);
    fs::remove_all(dir);
}

TEST_CASE("write_results with an empty result and bad paths") {
    ExperimentResult empty;
    empty.config.function = "sphere";
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "cgbench_empty.json";
    write_results(empty, path.string());
    const ExperimentResult back = read_results(path.string());
    CHECK(back.cells.empty());
    CHECK_FALSE(back.best_cell.has_value());
    fs::remove(path);

    CHECK_THROWS_AS(write_results(empty, "/nonexistent-dir/x/y.json"), IoError);
    CHECK_THROWS_AS(read_results("/nonexistent-dir/x/y.json"), IoError);
}

TEST_CASE("trace files are written when requested") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cgbench_traces";
    fs::remove_all(dir);
    ExperimentConfig cfg = small_config("sphere", Algorithm::clonalg);
    cfg.runs_per_cell = 2;
    cfg.trace_dir = dir.string();
    run_experiment(cfg);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++files;
        std::ifstream is(entry.path());
        std::string header;
        std::getline(is, header);
        CHECK(header == "generation,best_affinity,mean_affinity");
    }
    CHECK(files == 2);
    fs::remove_all(dir);
}

TEST_CASE("best_params matches the published table") {
    CellParams p = best_params("sphere", Algorithm::clonalg);
    CHECK(p.clone_set_index == 2);
    CHECK(p.mutation_group_index == 1);
    p = best_params("rastrigin", Algorithm::ga);
    CHECK(p.clone_set_index == 1);
    CHECK(p.ga_mutation_rate == 0.001);
    p = best_params("schwefel-2-22", Algorithm::clonalg);
    CHECK(p.clone_set_index == 1);
    CHECK(p.mutation_group_index == 1);
    CHECK_THROWS_AS(best_params("nope", Algorithm::ga), std::invalid_argument);
}

TEST_CASE("table2 emission shape and row order") {
    const auto rows = emit_table2(9, /*runs_per_cell=*/1, /*max_generations=*/5);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].function == "sphere");
    CHECK(rows[0].algorithm == "clonalg");
    CHECK(rows[0].clone_set == 2);
    CHECK(rows[0].mutation == "group-1");
    CHECK(rows[1].function == "sphere");
    CHECK(rows[1].algorithm == "ga");
    CHECK(rows[3].function == "rastrigin");
    CHECK(rows[3].mutation == "0.001");
    CHECK(rows[11].function == "schwefel-2-22");
    CHECK(rows[11].algorithm == "ga");

    std::ostringstream os;
    write_table2_csv(os, rows);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header ==
          "function,type,algorithm,clone_set,mutation,mean_proximity,mean_iterations,"
          "convergence_rate");
    CHECK(table2_to_json(rows).size() == 12);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg = small_config("sphere", Algorithm::clonalg);
    cfg.runs_per_cell = 0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg = small_config("sphere", Algorithm::clonalg);
    cfg.grid.clear();
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg = small_config("nosuch", Algorithm::clonalg);
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}
