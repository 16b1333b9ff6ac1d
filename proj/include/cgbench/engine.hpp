#ifndef CGBENCH_ENGINE_HPP
#define CGBENCH_ENGINE_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgbench/benchmarks.hpp"
#include "cgbench/operators.hpp"

namespace cgbench {

enum class Algorithm { clonalg, ga };

inline const char* algorithm_name(Algorithm a) {
    return a == Algorithm::clonalg ? "clonalg" : "ga";
}

inline Algorithm parse_algorithm(const std::string& s) {
    if (s == "clonalg") return Algorithm::clonalg;
    if (s == "ga") return Algorithm::ga;
    throw std::invalid_argument("algorithm must be 'clonalg' or 'ga'");
}

struct AlgorithmConfig {
    Algorithm algorithm = Algorithm::clonalg;
    int clone_set_index = 1;
    int mutation_group_index = 1;    // clonalg only
    double ga_mutation_rate = 0.005; // ga only
    double epsilon = 1e-6;
    long max_generations = 1'000'000;
    std::uint64_t seed = 0;
    bool record_trace = true;

    void validate() const {
        if (clone_set_index < 1 || clone_set_index > 3)
            throw std::invalid_argument("clone set index must be 1..3");
        if (algorithm == Algorithm::clonalg &&
            (mutation_group_index < 1 || mutation_group_index > 3))
            throw std::invalid_argument("mutation group index must be 1..3");
        if (algorithm == Algorithm::ga &&
            !(ga_mutation_rate > 0.0 && ga_mutation_rate < 1.0))
            throw std::invalid_argument("ga mutation rate must be in (0,1)");
        if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
        if (max_generations < 0) throw std::invalid_argument("max generations must be >= 0");
    }
};

struct TracePoint {
    long generation;
    double best_affinity;
    double mean_affinity;
};

using ConvergenceTrace = std::vector<TracePoint>;

struct RunResult {
    long iterations = 0;
    double best_affinity = 0.0;
    DecodedVector best_vector{};
    bool converged = false;
    ConvergenceTrace trace;
};

inline void write_trace_csv(std::ostream& os, const ConvergenceTrace& trace) {
    os << "generation,best_affinity,mean_affinity\n";
    for (const auto& pt : trace)
        os << pt.generation << ',' << pt.best_affinity << ',' << pt.mean_affinity << '\n';
}

// Evaluates only members flagged unevaluated (affinity caching).
inline void evaluate_population(Population& p, const BenchmarkSpec& spec, const Bounds& bounds) {
    for (auto& ind : p) {
        if (ind.evaluated) continue;
        const DecodedVector x = decode_genome(ind.genome, bounds);
        ind.affinity = spec.evaluate(x);
        ind.evaluated = true;
    }
}

namespace detail {

struct BestTracker {
    double affinity = std::numeric_limits<double>::infinity();
    Genome genome;

    void offer(const Population& p) {
        for (const auto& ind : p) {
            if (ind.evaluated && ind.affinity < affinity) {
                affinity = ind.affinity;
                genome = ind.genome;
            }
        }
    }
};

template <typename Step>
RunResult run_loop(const AlgorithmConfig& cfg, const BenchmarkSpec& spec, Step step) {
    cfg.validate();
    Rng rng(cfg.seed);
    const Bounds& bounds = spec.bounds;

    Population pop;
    pop.reserve(population_size);
    for (int i = 0; i < population_size; ++i) pop.push_back({random_genome(rng)});
    evaluate_population(pop, spec, bounds);

    BestTracker best;
    best.offer(pop);

    RunResult result;
    auto record = [&](long gen) {
        double sum = 0.0;
        for (const auto& ind : pop) sum += ind.affinity;
        if (cfg.record_trace)
            result.trace.push_back({gen, best.affinity, sum / static_cast<double>(pop.size())});
    };
    record(0);

    long gen = 0;
    while (best.affinity > cfg.epsilon && gen < cfg.max_generations) {
        ++gen;
        sort_population(pop);
        auto clones = clone_elites(pop, clone_set(cfg.clone_set_index));
        pop = assemble_next(pop, clones);
        step(pop, rng);
        evaluate_population(pop, spec, bounds);
        best.offer(pop);
        record(gen);
    }

    result.iterations = gen;
    result.best_affinity = best.affinity;
    result.best_vector = decode_genome(best.genome, bounds);
    result.converged = best.affinity <= cfg.epsilon;
    return result;
}

} // namespace detail

inline RunResult run_clonalg(const AlgorithmConfig& cfg, const BenchmarkSpec& spec) {
    if (cfg.algorithm != Algorithm::clonalg)
        throw std::invalid_argument("run_clonalg: config algorithm must be clonalg");
    const MutationGroup group = mutation_group(cfg.mutation_group_index);
    return detail::run_loop(cfg, spec, [&](Population& pop, Rng& rng) {
        banded_mutation(pop, group, rng);
    });
}

inline RunResult run_ga(const AlgorithmConfig& cfg, const BenchmarkSpec& spec) {
    if (cfg.algorithm != Algorithm::ga)
        throw std::invalid_argument("run_ga: config algorithm must be ga");
    return detail::run_loop(cfg, spec, [&](Population& pop, Rng& rng) {
        pair_and_crossover(pop, rng);
        flat_mutation(pop, cfg.ga_mutation_rate, rng);
    });
}

inline RunResult run(const AlgorithmConfig& cfg, const BenchmarkSpec& spec) {
    return cfg.algorithm == Algorithm::clonalg ? run_clonalg(cfg, spec) : run_ga(cfg, spec);
}

} // namespace cgbench

#endif
