#pragma once

#include <bit>
#include <cstdint>
#include <random>

#include "nfsr/truth_table.hpp"

namespace nfsr {

// std::mt19937_64 output is fully specified by the standard; the std
// distributions are not. Reproducible runs derive every value through
// these helpers instead.

inline double uniform_unit(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53; // [0, 1)
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
    return uniform_unit(rng) < p;
}

// Uniform integer in [0, bound). Masked rejection; bound >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t(0) >> std::countl_zero(bound - 1);
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v < bound) return v;
    }
}

// Every bit iid uniform.
inline TruthTable random_truth_table(int n, std::mt19937_64& rng) {
    TruthTable f(n);
    auto& words = f.words();
    for (auto& w : words) w = rng();
    words.back() &= f.last_word_mask();
    return f;
}

} // namespace nfsr
