#ifndef CGBENCH_HARNESS_HPP
#define CGBENCH_HARNESS_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgbench/engine.hpp"

namespace cgbench {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// One point of the parameter grid.
struct CellParams {
    Algorithm algorithm = Algorithm::clonalg;
    int clone_set_index = 1;
    int mutation_group_index = 1;    // clonalg
    double ga_mutation_rate = 0.005; // ga

    bool operator==(const CellParams&) const = default;
};

struct RunRecord {
    int run_index = 0;
    std::uint64_t seed = 0;
    long iterations = 0;
    double best_affinity = 0.0;
    bool converged = false;

    bool operator==(const RunRecord&) const = default;
};

struct AggregateStats {
    double mean_iterations = 0.0;
    double mean_proximity = 0.0;
    double convergence_rate = 0.0;
    long min_iterations = 0;
    long max_iterations = 0;

    bool operator==(const AggregateStats&) const = default;
};

struct CellResult {
    CellParams params;
    std::vector<RunRecord> runs;
    AggregateStats stats;

    bool operator==(const CellResult&) const = default;
};

struct ExperimentConfig {
    std::string function;
    std::vector<CellParams> grid;
    int runs_per_cell = 10;
    std::optional<double> epsilon; // default: benchmark's epsilon
    long max_generations = 1'000'000;
    std::uint64_t seed = 0;
    std::optional<std::string> trace_dir; // per-run convergence CSVs when set

    void validate() const {
        if (runs_per_cell < 1) throw std::invalid_argument("runs per cell must be >= 1");
        if (grid.empty()) throw std::invalid_argument("parameter grid must be non-empty");
    }
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<CellResult> cells;
    std::optional<std::size_t> best_cell; // only if some cell fully converged

    bool operator==(const ExperimentResult& o) const {
        return cells == o.cells && best_cell == o.best_cell;
    }
};

inline AggregateStats aggregate(const std::vector<RunRecord>& runs) {
    AggregateStats s;
    s.min_iterations = std::numeric_limits<long>::max();
    s.max_iterations = 0;
    long iter_sum = 0;
    double prox_sum = 0.0;
    int converged = 0;
    for (const auto& r : runs) {
        iter_sum += r.iterations;
        prox_sum += r.best_affinity;
        converged += r.converged ? 1 : 0;
        s.min_iterations = std::min(s.min_iterations, r.iterations);
        s.max_iterations = std::max(s.max_iterations, r.iterations);
    }
    const double n = static_cast<double>(runs.size());
    s.mean_iterations = static_cast<double>(iter_sum) / n;
    s.mean_proximity = prox_sum / n;
    s.convergence_rate = static_cast<double>(converged) / n;
    return s;
}

inline AlgorithmConfig make_run_config(const CellParams& params, double epsilon,
                                       long max_generations, std::uint64_t seed,
                                       bool record_trace = false) {
    AlgorithmConfig cfg;
    cfg.algorithm = params.algorithm;
    cfg.clone_set_index = params.clone_set_index;
    cfg.mutation_group_index = params.mutation_group_index;
    cfg.ga_mutation_rate = params.ga_mutation_rate;
    cfg.epsilon = epsilon;
    cfg.max_generations = max_generations;
    cfg.seed = seed;
    cfg.record_trace = record_trace;
    return cfg;
}

namespace detail {

inline void write_trace_file(const std::string& dir, const std::string& function,
                             const CellParams& params, std::size_t cell, int run,
                             const ConvergenceTrace& trace) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    std::ostringstream name;
    name << function << '_' << algorithm_name(params.algorithm) << "_cell" << cell << "_run"
         << run << ".csv";
    const fs::path path = fs::path(dir) / name.str();
    std::ofstream os(path);
    if (!os) throw IoError("cannot open trace file " + path.string());
    write_trace_csv(os, trace);
}

} // namespace detail

// Runs every grid cell runs_per_cell times with seeds derived from
// (experiment seed, cell index, run index); deterministic given the config.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const BenchmarkSpec& spec = lookup(cfg.function);
    const double epsilon = cfg.epsilon.value_or(spec.default_epsilon);

    ExperimentResult result;
    result.config = cfg;
    for (std::size_t cell = 0; cell < cfg.grid.size(); ++cell) {
        CellResult cr;
        cr.params = cfg.grid[cell];
        for (int run = 0; run < cfg.runs_per_cell; ++run) {
            const std::uint64_t run_seed = derive_seed(cfg.seed, cell, static_cast<std::uint64_t>(run));
            const AlgorithmConfig rc = make_run_config(cr.params, epsilon, cfg.max_generations,
                                                       run_seed, cfg.trace_dir.has_value());
            const RunResult rr = cgbench::run(rc, spec);
            if (cfg.trace_dir)
                detail::write_trace_file(*cfg.trace_dir, cfg.function, cr.params, cell, run,
                                         rr.trace);
            cr.runs.push_back({run, run_seed, rr.iterations, rr.best_affinity, rr.converged});
        }
        cr.stats = aggregate(cr.runs);
        result.cells.push_back(std::move(cr));
    }

    // Best cell: lowest mean iterations among fully converged cells; ties go
    // to lower mean proximity, then lower cell index.
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
        const auto& s = result.cells[i].stats;
        if (s.convergence_rate < 1.0) continue;
        if (!result.best_cell) {
            result.best_cell = i;
            continue;
        }
        const auto& b = result.cells[*result.best_cell].stats;
        if (s.mean_iterations < b.mean_iterations ||
            (s.mean_iterations == b.mean_iterations && s.mean_proximity < b.mean_proximity))
            result.best_cell = i;
    }
    return result;
}

inline std::vector<CellParams> full_grid(Algorithm algorithm) {
    std::vector<CellParams> grid;
    for (int set = 1; set <= 3; ++set) {
        for (int m = 1; m <= 3; ++m) {
            CellParams p;
            p.algorithm = algorithm;
            p.clone_set_index = set;
            if (algorithm == Algorithm::clonalg)
                p.mutation_group_index = m;
            else
                p.ga_mutation_rate = ga_rate(m);
            grid.push_back(p);
        }
    }
    return grid;
}

// Full 3x3 sweep, ten runs per cell, default epsilon for the function.
inline ExperimentResult sweep(const std::string& function, Algorithm algorithm,
                              std::uint64_t seed, long max_generations = 1'000'000) {
    ExperimentConfig cfg;
    cfg.function = function;
    cfg.grid = full_grid(algorithm);
    cfg.runs_per_cell = 10;
    cfg.seed = seed;
    cfg.max_generations = max_generations;
    return run_experiment(cfg);
}

// Table 2 best parameter combinations, keyed by function name.
inline CellParams best_params(const std::string& function, Algorithm algorithm) {
    struct Row {
        const char* name;
        int cl_set, cl_group;
        int ga_set;
        double ga_mut;
    };
    static constexpr Row rows[] = {
        {"sphere", 2, 1, 2, 0.005},
        {"rastrigin", 3, 3, 1, 0.001},
        {"ackley", 2, 1, 1, 0.001},
        {"modified-sinusoidal", 3, 2, 1, 0.001},
        {"sum-of-powers", 3, 1, 1, 0.005},
        {"schwefel-2-22", 1, 1, 1, 0.001},
    };
    for (const auto& r : rows) {
        if (function != r.name) continue;
        CellParams p;
        p.algorithm = algorithm;
        if (algorithm == Algorithm::clonalg) {
            p.clone_set_index = r.cl_set;
            p.mutation_group_index = r.cl_group;
        } else {
            p.clone_set_index = r.ga_set;
            p.ga_mutation_rate = r.ga_mut;
        }
        return p;
    }
    throw std::invalid_argument("no best-parameter row for function '" + function + "'");
}

struct Table2Row {
    std::string function;
    std::string type;
    std::string algorithm;
    int clone_set;
    std::string mutation; // "group-<i>" for clonalg, the flat rate for ga
    double mean_proximity;
    double mean_iterations;
    double convergence_rate;
};

// Six functions x two algorithms at the published best parameters, ten runs
// each, emitted in the published row order (clonalg row first per function).
inline std::vector<Table2Row> emit_table2(std::uint64_t seed, int runs_per_cell = 10,
                                          long max_generations = 1'000'000) {
    std::vector<Table2Row> rows;
    for (const auto& spec : all_benchmarks()) {
        for (Algorithm alg : {Algorithm::clonalg, Algorithm::ga}) {
            ExperimentConfig cfg;
            cfg.function = spec.name;
            cfg.grid = {best_params(spec.name, alg)};
            cfg.runs_per_cell = runs_per_cell;
            cfg.max_generations = max_generations;
            cfg.seed = splitmix64(seed ^ (rows.size() + 1));
            const ExperimentResult res = run_experiment(cfg);
            const CellResult& cell = res.cells.front();
            std::string mutation;
            if (alg == Algorithm::clonalg) {
                mutation = "group-" + std::to_string(cell.params.mutation_group_index);
            } else {
                std::ostringstream m;
                m << cell.params.ga_mutation_rate;
                mutation = m.str();
            }
            rows.push_back({spec.name, modality_label(spec.modality), algorithm_name(alg),
                            cell.params.clone_set_index, mutation, cell.stats.mean_proximity,
                            cell.stats.mean_iterations, cell.stats.convergence_rate});
        }
    }
    return rows;
}

inline void write_table2_csv(std::ostream& os, const std::vector<Table2Row>& rows) {
    os << "function,type,algorithm,clone_set,mutation,mean_proximity,mean_iterations,"
          "convergence_rate\n";
    for (const auto& r : rows)
        os << r.function << ',' << r.type << ',' << r.algorithm << ',' << r.clone_set << ','
           << r.mutation << ',' << r.mean_proximity << ',' << r.mean_iterations << ','
           << r.convergence_rate << '\n';
}

inline nlohmann::json table2_to_json(const std::vector<Table2Row>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"function", r.function},
                       {"type", r.type},
                       {"algorithm", r.algorithm},
                       {"clone_set", r.clone_set},
                       {"mutation", r.mutation},
                       {"mean_proximity", r.mean_proximity},
                       {"mean_iterations", r.mean_iterations},
                       {"convergence_rate", r.convergence_rate}});
    }
    return arr;
}

inline nlohmann::json cell_params_to_json(const CellParams& p) {
    nlohmann::json j{{"algorithm", algorithm_name(p.algorithm)},
                     {"clone_set", p.clone_set_index}};
    if (p.algorithm == Algorithm::clonalg)
        j["mutation_group"] = p.mutation_group_index;
    else
        j["ga_mutation_rate"] = p.ga_mutation_rate;
    return j;
}

inline CellParams cell_params_from_json(const nlohmann::json& j) {
    CellParams p;
    p.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    p.clone_set_index = j.at("clone_set").get<int>();
    if (p.algorithm == Algorithm::clonalg)
        p.mutation_group_index = j.at("mutation_group").get<int>();
    else
        p.ga_mutation_rate = j.at("ga_mutation_rate").get<double>();
    return p;
}

inline nlohmann::json result_to_json(const ExperimentResult& result) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : result.cells) {
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& r : cell.runs) {
            runs.push_back({{"run", r.run_index},
                            {"seed", r.seed},
                            {"iterations", r.iterations},
                            {"best_affinity", r.best_affinity},
                            {"converged", r.converged}});
        }
        cells.push_back({{"params", cell_params_to_json(cell.params)},
                         {"runs", runs},
                         {"stats",
                          {{"mean_iterations", cell.stats.mean_iterations},
                           {"mean_proximity", cell.stats.mean_proximity},
                           {"convergence_rate", cell.stats.convergence_rate},
                           {"min_iterations", cell.stats.min_iterations},
                           {"max_iterations", cell.stats.max_iterations}}}});
    }
    nlohmann::json j{{"function", result.config.function},
                     {"seed", result.config.seed},
                     {"runs_per_cell", result.config.runs_per_cell},
                     {"max_generations", result.config.max_generations},
                     {"cells", cells}};
    if (result.config.epsilon) j["epsilon"] = *result.config.epsilon;
    if (result.best_cell)
        j["best_cell"] = *result.best_cell;
    else
        j["best_cell"] = nullptr;
    return j;
}

inline ExperimentResult result_from_json(const nlohmann::json& j) {
    ExperimentResult result;
    result.config.function = j.at("function").get<std::string>();
    result.config.seed = j.at("seed").get<std::uint64_t>();
    result.config.runs_per_cell = j.at("runs_per_cell").get<int>();
    result.config.max_generations = j.at("max_generations").get<long>();
    if (j.contains("epsilon") && !j["epsilon"].is_null())
        result.config.epsilon = j["epsilon"].get<double>();
    for (const auto& jc : j.at("cells")) {
        CellResult cell;
        cell.params = cell_params_from_json(jc.at("params"));
        for (const auto& jr : jc.at("runs")) {
            cell.runs.push_back({jr.at("run").get<int>(), jr.at("seed").get<std::uint64_t>(),
                                 jr.at("iterations").get<long>(),
                                 jr.at("best_affinity").get<double>(),
                                 jr.at("converged").get<bool>()});
        }
        const auto& js = jc.at("stats");
        cell.stats = {js.at("mean_iterations").get<double>(),
                      js.at("mean_proximity").get<double>(),
                      js.at("convergence_rate").get<double>(),
                      js.at("min_iterations").get<long>(), js.at("max_iterations").get<long>()};
        result.config.grid.push_back(cell.params);
        result.cells.push_back(std::move(cell));
    }
    if (!j.at("best_cell").is_null()) result.best_cell = j["best_cell"].get<std::size_t>();
    return result;
}

inline void write_results(const ExperimentResult& result, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open output file " + path);
    os << result_to_json(result).dump(2) << '\n';
    if (!os) throw IoError("write failed for " + path);
}

inline ExperimentResult read_results(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open input file " + path);
    nlohmann::json j;
    is >> j;
    return result_from_json(j);
}

} // namespace cgbench

#endif
