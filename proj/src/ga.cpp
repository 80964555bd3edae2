#include "nfsr/ga.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "nfsr/rng.hpp"

namespace nfsr {

namespace {

std::int64_t square(std::int64_t v) { return v * v; }

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

const char* fitness_mode_name(FitnessMode mode) {
    switch (mode) {
        case FitnessMode::PenalizeBoth: return "penalize-both";
        case FitnessMode::RewardDGap: return "reward-d-gap";
        case FitnessMode::IgnoreD: return "ignore-d";
    }
    return "?";
}

// fitness() for a summary already in hand.
std::int64_t fitness_of_summary(const CycleGoeSummary& s, const GaConfig& cfg,
                                std::int64_t m) {
    const std::int64_t r_gap = square(std::int64_t(cfg.target_r) - std::int64_t(s.max_cycle_r));
    const std::int64_t d_gap = square(std::int64_t(cfg.target_d) - std::int64_t(s.goe_count_d));
    switch (cfg.fitness_mode) {
        case FitnessMode::PenalizeBoth: return m - r_gap - d_gap;
        case FitnessMode::RewardDGap: return m - r_gap + d_gap;
        case FitnessMode::IgnoreD: return m - r_gap;
    }
    return m;
}

} // namespace

std::int64_t default_fitness_offset(int n) {
    return (std::int64_t(1) << (2 * n)) + (std::int64_t(1) << (2 * n - 2)) + 1;
}

std::int64_t resolved_fitness_offset(const GaConfig& cfg) {
    return cfg.fitness_offset.value_or(default_fitness_offset(cfg.n));
}

void validate(const GaConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 16) {
        throw std::invalid_argument("n must be in [1, 16]");
    }
    const std::uint32_t states = 1u << cfg.n;
    if (cfg.target_r < 1 || cfg.target_r > states) {
        throw std::invalid_argument("target_r must be in [1, " +
                                    std::to_string(states) + "], got " +
                                    std::to_string(cfg.target_r));
    }
    if (cfg.target_d > states / 2) {
        throw std::invalid_argument("target_d must be in [0, " +
                                    std::to_string(states / 2) + "], got " +
                                    std::to_string(cfg.target_d));
    }
    if (cfg.population < 2) {
        throw std::invalid_argument("population must be at least 2");
    }
    if (cfg.elite_count < 1 || cfg.elite_count >= cfg.population) {
        throw std::invalid_argument("elite_count must be in [1, population)");
    }
    if (!(cfg.mutation_rate >= 0.0 && cfg.mutation_rate <= 1.0)) {
        throw std::invalid_argument("mutation_rate must be in [0, 1]");
    }
    if (cfg.trace_stride < 1) {
        throw std::invalid_argument("trace_stride must be positive");
    }
}

std::int64_t fitness(const TruthTable& gene, const GaConfig& cfg) {
    if (gene.n() != cfg.n) {
        throw std::invalid_argument("width mismatch: gene has n=" +
                                    std::to_string(gene.n()) + ", config has n=" +
                                    std::to_string(cfg.n));
    }
    return fitness_of_summary(cycle_goe_summary(gene), cfg,
                              resolved_fitness_offset(cfg));
}

TruthTable uniform_crossover(const TruthTable& a, const TruthTable& b,
                             std::mt19937_64& rng) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("width mismatch: parents have n=" +
                                    std::to_string(a.n()) + " and n=" +
                                    std::to_string(b.n()));
    }
    TruthTable child(a.n());
    auto& out = child.words();
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t w = 0; w < out.size(); ++w) {
        const std::uint64_t pick = rng(); // bit set -> take a
        out[w] = (wa[w] & pick) | (wb[w] & ~pick);
    }
    out.back() &= child.last_word_mask();
    return child;
}

TruthTable mutate(const TruthTable& gene, double rate, std::mt19937_64& rng) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
        throw std::invalid_argument("mutation rate must be in [0, 1]");
    }
    TruthTable out = gene;
    for (std::uint32_t i = 0; i < out.size(); ++i) {
        if (bernoulli(rng, rate)) out.flip_bit(i);
    }
    return out;
}

std::vector<TruthTable> random_population(const GaConfig& cfg, std::mt19937_64& rng) {
    std::vector<TruthTable> pop;
    pop.reserve(cfg.population);
    for (std::uint32_t i = 0; i < cfg.population; ++i) {
        pop.push_back(random_truth_table(cfg.n, rng));
    }
    return pop;
}

GaResult evolve(const GaConfig& cfg) {
    validate(cfg);
    const std::int64_t m = resolved_fitness_offset(cfg);
    const unsigned workers = resolve_threads(cfg.threads);

    std::mt19937_64 rng(cfg.seed);
    std::vector<TruthTable> pop = random_population(cfg, rng);

    std::vector<CycleGoeSummary> stats(cfg.population);
    std::vector<std::int64_t> fit(cfg.population);
    std::vector<std::uint32_t> ranked(cfg.population);

    // Pure per-gene evaluation; sharding cannot change the stored values.
    const auto evaluate = [&] {
        const std::uint32_t count = cfg.population;
        const unsigned shards = std::min<unsigned>(workers, count);
        if (shards <= 1) {
            for (std::uint32_t i = 0; i < count; ++i) {
                stats[i] = cycle_goe_summary(pop[i]);
                fit[i] = fitness_of_summary(stats[i], cfg, m);
            }
            return;
        }
        std::vector<std::thread> threads;
        threads.reserve(shards);
        for (unsigned w = 0; w < shards; ++w) {
            const std::uint32_t lo = std::uint32_t(std::uint64_t(count) * w / shards);
            const std::uint32_t hi = std::uint32_t(std::uint64_t(count) * (w + 1) / shards);
            threads.emplace_back([&, lo, hi] {
                for (std::uint32_t i = lo; i < hi; ++i) {
                    stats[i] = cycle_goe_summary(pop[i]);
                    fit[i] = fitness_of_summary(stats[i], cfg, m);
                }
            });
        }
        for (auto& t : threads) t.join();
    };

    GaResult result{TruthTable(cfg.n), {}, 0, 0, false, {}};
    std::uint64_t generation = 0;
    for (;; ++generation) {
        evaluate();

        // Equal fitness ranks by population index, so the loop is
        // deterministic end to end.
        std::iota(ranked.begin(), ranked.end(), 0);
        std::sort(ranked.begin(), ranked.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (fit[a] != fit[b]) return fit[a] > fit[b];
            return a < b;
        });
        const std::uint32_t best = ranked[0];

        if (generation % cfg.trace_stride == 0) {
            result.fitness_trace.push_back(fit[best]);
        }

        const bool hit = stats[best].max_cycle_r == cfg.target_r &&
                         stats[best].goe_count_d == cfg.target_d;
        if (hit || generation == cfg.max_generations) {
            if (generation % cfg.trace_stride != 0) {
                result.fitness_trace.push_back(fit[best]);
            }
            result.best_gene = pop[best];
            result.best_fitness = fit[best];
            result.generations_run = generation;
            break;
        }

        // Elites survive unchanged; the rest are bred from them.
        std::vector<TruthTable> next;
        next.reserve(cfg.population);
        for (std::uint32_t e = 0; e < cfg.elite_count; ++e) {
            next.push_back(pop[ranked[e]]);
        }
        while (next.size() < cfg.population) {
            const auto& pa = next[uniform_below(rng, cfg.elite_count)];
            const auto& pb = next[uniform_below(rng, cfg.elite_count)];
            next.push_back(mutate(uniform_crossover(pa, pb, rng), cfg.mutation_rate, rng));
        }
        pop = std::move(next);
    }

    // Verification gate: the returned analysis comes from analyze(), and
    // success is judged from it rather than the loop's cached stats.
    result.best_analysis = analyze(result.best_gene);
    result.success = result.best_analysis.max_cycle_r == cfg.target_r &&
                     result.best_analysis.goe_count_d == cfg.target_d;
    return result;
}

std::string ga_result_to_json(const GaConfig& cfg, const GaResult& result) {
    nlohmann::ordered_json j;
    auto& c = j["config"] = nlohmann::ordered_json::object();
    c["n"] = cfg.n;
    c["target_r"] = cfg.target_r;
    c["target_d"] = cfg.target_d;
    c["m"] = resolved_fitness_offset(cfg);
    c["population"] = cfg.population;
    c["elite_count"] = cfg.elite_count;
    c["mutation_rate"] = cfg.mutation_rate;
    c["max_generations"] = cfg.max_generations;
    c["seed"] = cfg.seed;
    c["fitness_mode"] = fitness_mode_name(cfg.fitness_mode);
    c["trace_stride"] = cfg.trace_stride;
    j["best_gene"] = format_truth_table_hex(result.best_gene);
    j["r"] = result.best_analysis.max_cycle_r;
    j["d"] = result.best_analysis.goe_count_d;
    j["fitness"] = result.best_fitness;
    j["generations_run"] = result.generations_run;
    j["success"] = result.success;
    j["fitness_trace"] = result.fitness_trace;
    return j.dump(2) + "\n";
}

} // namespace nfsr
