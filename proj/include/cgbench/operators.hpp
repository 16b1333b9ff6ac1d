#ifndef CGBENCH_OPERATORS_HPP
#define CGBENCH_OPERATORS_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cgbench/encoding.hpp"
#include "cgbench/rng.hpp"

namespace cgbench {

inline constexpr int population_size = 40;
inline constexpr int elite_count = 4;

struct Individual {
    Genome genome;
    double affinity = std::numeric_limits<double>::quiet_NaN();
    bool evaluated = false;
    int parent_rank = -1; // rank (0-3) of the elite this clone came from, -1 otherwise
};

using Population = std::vector<Individual>;

// Table 1 clone counts for the four best individuals.
struct CloneSet {
    std::array<int, elite_count> counts;

    int total() const {
        int t = 0;
        for (int c : counts) t += c;
        return t;
    }
};

inline CloneSet clone_set(int index) {
    switch (index) {
        case 1: return {{15, 7, 5, 3}};
        case 2: return {{17, 8, 5, 4}};
        case 3: return {{18, 9, 6, 4}};
    }
    throw std::invalid_argument("clone set index must be 1..3");
}

// Five ascending rates; the smallest applies to the best-ranked band.
struct MutationGroup {
    std::array<double, 5> rates;
};

inline MutationGroup mutation_group(int index) {
    switch (index) {
        case 1: return {{0.01, 0.02, 0.03, 0.04, 0.05}};
        case 2: return {{0.015, 0.04, 0.065, 0.09, 0.115}};
        case 3: return {{0.025, 0.05, 0.075, 0.1, 0.125}};
    }
    throw std::invalid_argument("mutation group index must be 1..3");
}

// The three flat GA rates of the study, addressable like the clone sets.
inline double ga_rate(int index) {
    switch (index) {
        case 1: return 0.005;
        case 2: return 0.001;
        case 3: return 0.01;
    }
    throw std::invalid_argument("ga rate index must be 1..3");
}

inline void sort_population(Population& p) {
    for (const auto& ind : p) {
        assert(ind.evaluated);
        (void)ind;
    }
    std::stable_sort(p.begin(), p.end(),
                     [](const Individual& a, const Individual& b) { return a.affinity < b.affinity; });
}

// Clones of the four best, best-first, each carrying its parent's rank.
inline std::vector<Individual> clone_elites(const Population& p, const CloneSet& s) {
    assert(p.size() == population_size);
    std::vector<Individual> clones;
    clones.reserve(static_cast<std::size_t>(s.total()));
    for (int rank = 0; rank < elite_count; ++rank) {
        for (int c = 0; c < s.counts[static_cast<std::size_t>(rank)]; ++c) {
            Individual clone = p[static_cast<std::size_t>(rank)];
            clone.parent_rank = rank;
            clones.push_back(clone);
        }
    }
    return clones;
}

// Next population = elites, then clones, then the best non-elite carryovers,
// truncated to exactly 40. Clones are ordered best-parent-first, so plain
// truncation drops trailing clones of the worst-ranked parent.
inline Population assemble_next(const Population& previous, const std::vector<Individual>& clones) {
    assert(previous.size() == population_size);
    Population next;
    next.reserve(population_size);
    for (int i = 0; i < elite_count; ++i) next.push_back(previous[static_cast<std::size_t>(i)]);
    for (const auto& c : clones) {
        if (next.size() == population_size) break;
        next.push_back(c);
    }
    for (std::size_t i = elite_count; i < previous.size() && next.size() < population_size; ++i)
        next.push_back(previous[i]);
    assert(next.size() == population_size);
    return next;
}

inline constexpr std::array<int, 5> band_sizes = {8, 7, 7, 7, 7};

inline void flip_bits(Individual& ind, double rate, Rng& rng) {
    for (int b = 0; b < genome_bits; ++b)
        if (next_unit(rng) < rate) ind.genome.flip_bit(b);
    ind.evaluated = false;
}

// Rank-banded hypermutation: positions 0-3 untouched; positions 4-39 split
// into five contiguous bands of sizes (8,7,7,7,7), band b mutated at rates[b].
inline void banded_mutation(Population& p, const MutationGroup& g, Rng& rng) {
    if (p.size() != population_size)
        throw std::logic_error("banded_mutation: population size must be 40");
    std::size_t pos = elite_count;
    for (std::size_t band = 0; band < band_sizes.size(); ++band) {
        for (int i = 0; i < band_sizes[band]; ++i, ++pos) flip_bits(p[pos], g.rates[band], rng);
    }
    assert(pos == population_size);
}

inline void flat_mutation(Population& p, double rate, Rng& rng) {
    if (!(rate >= 0.0 && rate <= 1.0))
        throw std::invalid_argument("flat_mutation: rate must be in [0,1]");
    if (p.size() != population_size)
        throw std::logic_error("flat_mutation: population size must be 40");
    for (std::size_t i = elite_count; i < p.size(); ++i) flip_bits(p[i], rate, rng);
}

inline std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, int cut) {
    if (cut < 1 || cut > genome_bits - 1)
        throw std::invalid_argument("single_point_crossover: cut must be in [1,199]");
    Genome c1 = a, c2 = b;
    for (int i = cut; i < genome_bits; ++i) {
        c1.set_bit(i, b.bit(i) != 0);
        c2.set_bit(i, a.bit(i) != 0);
    }
    return {c1, c2};
}

// Shuffles the 36 non-elites, pairs them consecutively and replaces every
// pair with its crossover children at a uniform cut in [1,199].
inline void pair_and_crossover(Population& p, Rng& rng) {
    if (p.size() != population_size)
        throw std::logic_error("pair_and_crossover: population size must be 40");
    std::array<std::size_t, population_size - elite_count> order{};
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = elite_count + i;
    for (std::size_t i = order.size() - 1; i > 0; --i)
        std::swap(order[i], order[next_below(rng, i + 1)]);
    for (std::size_t k = 0; k + 1 < order.size(); k += 2) {
        Individual& a = p[order[k]];
        Individual& b = p[order[k + 1]];
        const int cut = 1 + static_cast<int>(next_below(rng, genome_bits - 1));
        auto [c1, c2] = single_point_crossover(a.genome, b.genome, cut);
        a.genome = c1;
        b.genome = c2;
        a.evaluated = false;
        b.evaluated = false;
    }
}

} // namespace cgbench

#endif
