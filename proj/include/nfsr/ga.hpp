#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nfsr/state_space.hpp"
#include "nfsr/truth_table.hpp"

namespace nfsr {

enum class FitnessMode {
    PenalizeBoth, // m - (r'-r)^2 - (d'-d)^2
    RewardDGap,   // m - (r'-r)^2 + (d'-d)^2
    IgnoreD,      // m - (r'-r)^2
};

struct GaConfig {
    int n = 4;
    std::uint32_t target_r = 1; // r'
    std::uint32_t target_d = 0; // d'
    // Fitness offset m; defaults to 2^(2n) + 2^(2n-2) + 1, which keeps
    // fitness positive for every gene under PenalizeBoth.
    std::optional<std::int64_t> fitness_offset;
    std::uint32_t population = 1000;
    std::uint32_t elite_count = 10;
    double mutation_rate = 0.01; // per bit
    std::uint64_t max_generations = 10000;
    std::uint64_t seed = 0;
    FitnessMode fitness_mode = FitnessMode::PenalizeBoth;
    std::uint32_t trace_stride = 1; // record every k-th generation
    unsigned threads = 0;           // fitness evaluation; 0 = auto, never
                                    // affects results
};

std::int64_t default_fitness_offset(int n);
std::int64_t resolved_fitness_offset(const GaConfig& cfg);
void validate(const GaConfig& cfg); // throws std::invalid_argument

struct GaResult {
    TruthTable best_gene;
    StateAnalysis best_analysis; // recomputed via analyze(), not cached
    std::int64_t best_fitness = 0;
    std::uint64_t generations_run = 0;
    bool success = false; // best gene hits both targets exactly
    std::vector<std::int64_t> fitness_trace;
};

// m minus the squared target deviations of analyze(gene)'s (r, d).
// Equals m exactly when both targets are met (PenalizeBoth).
std::int64_t fitness(const TruthTable& gene, const GaConfig& cfg);

// Each output bit copied from a or b independently with probability 1/2.
TruthTable uniform_crossover(const TruthTable& a, const TruthTable& b,
                             std::mt19937_64& rng);

// Each bit flipped independently with the given probability.
TruthTable mutate(const TruthTable& gene, double rate, std::mt19937_64& rng);

std::vector<TruthTable> random_population(const GaConfig& cfg, std::mt19937_64& rng);

// Elitist generation loop: keep the top elite_count genes, refill the rest
// with mutated uniform crossovers of elite parents. Stops as soon as the
// best gene matches (target_r, target_d) exactly. Deterministic for a fixed
// seed, regardless of threads.
GaResult evolve(const GaConfig& cfg);

std::string ga_result_to_json(const GaConfig& cfg, const GaResult& result);

} // namespace nfsr
