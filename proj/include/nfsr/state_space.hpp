#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfsr/truth_table.hpp"

namespace nfsr {

// One n-bit window of the register's output stream, newest sample in the
// most significant bit. The decimal display of a state is its code.
struct StateVector {
    int n = 0;
    std::uint32_t code = 0;

    friend bool operator==(const StateVector&, const StateVector&) = default;
};

enum class StateClass : std::uint8_t {
    Periodic,     // lies on a cycle
    Transient,    // off-cycle, has at least one predecessor
    GardenOfEden, // off-cycle, no predecessor at all
};

// Exact classification of all 2^n states of the transition graph of one
// feedback function.
struct StateAnalysis {
    int n = 0;
    std::vector<StateClass> classes;            // indexed by state code
    std::vector<std::vector<std::uint32_t>> cycles; // transition order, each
                                                    // starting at its smallest code
    std::uint32_t max_cycle_r = 0;              // largest minimal period
    std::uint32_t goe_count_d = 0;
    std::vector<std::uint32_t> successor;       // code -> next code
};

// Just the two scalars of StateAnalysis, without cycle lists.
struct CycleGoeSummary {
    std::uint32_t max_cycle_r = 0;
    std::uint32_t goe_count_d = 0;
};

// New bit from the feedback function; the state itself is the input vector.
bool eval(const TruthTable& f, StateVector state);

// Shift one step: the new bit enters at the newest (most significant)
// position, the oldest bit drops off.
StateVector step(const TruthTable& f, StateVector state);

// All p with step(f, p) == state, ascending by code. At most two exist: the
// candidates are the two codes whose top n-1 bits equal state's bottom n-1
// bits.
std::vector<StateVector> predecessors(const TruthTable& f, StateVector state);

// [start, step(start), ..., step^steps(start)], length steps + 1.
std::vector<StateVector> orbit(const TruthTable& f, StateVector start,
                               std::uint64_t steps);

StateAnalysis analyze(const TruthTable& f);
CycleGoeSummary cycle_goe_summary(const TruthTable& f);

// "(1,0,1)" -- bits newest first, matching the tuple display of states.
std::string format_state_tuple(StateVector state);

} // namespace nfsr
