#include "nfsr/state_space.hpp"

#include <algorithm>

namespace nfsr {

namespace {

void check_state(const TruthTable& f, StateVector state) {
    if (state.n != f.n()) {
        throw std::invalid_argument("width mismatch: state has n=" +
                                    std::to_string(state.n) + ", function has n=" +
                                    std::to_string(f.n()));
    }
    if (state.code >= f.size()) {
        throw std::invalid_argument("state code " + std::to_string(state.code) +
                                    " out of range for n=" + std::to_string(state.n));
    }
}

// Successor array, in-degree peel, cycle walk. Shared by analyze() and
// cycle_goe_summary().
struct GraphScan {
    std::vector<std::uint32_t> succ;
    std::vector<std::uint32_t> indeg;
    std::vector<std::uint8_t> goe;       // in-degree 0 in the original graph
    std::vector<std::uint8_t> off_cycle; // peeled away
    std::vector<std::uint8_t> seen;
    std::uint32_t goe_count = 0;
    std::uint32_t max_cycle = 0;

    void run(const TruthTable& f) {
        const std::uint32_t size = f.size();
        const int shift = f.n() - 1;

        succ.resize(size);
        indeg.assign(size, 0);
        goe.assign(size, 0);
        off_cycle.assign(size, 0);
        seen.assign(size, 0);
        for (std::uint32_t s = 0; s < size; ++s) {
            succ[s] = (std::uint32_t(f.bit(s)) << shift) | (s >> 1);
            ++indeg[succ[s]];
        }

        // Garden-of-Eden states are exactly the in-degree-0 states of the
        // original graph; peeling from them strips everything off-cycle.
        std::vector<std::uint32_t> stack;
        goe_count = 0;
        for (std::uint32_t s = 0; s < size; ++s) {
            if (indeg[s] == 0) {
                goe[s] = 1;
                ++goe_count;
                stack.push_back(s);
            }
        }
        while (!stack.empty()) {
            const std::uint32_t s = stack.back();
            stack.pop_back();
            off_cycle[s] = 1;
            const std::uint32_t t = succ[s];
            if (--indeg[t] == 0) stack.push_back(t);
        }

        // Remaining states partition into cycles; walk each once.
        max_cycle = 0;
        for (std::uint32_t s = 0; s < size; ++s) {
            if (off_cycle[s] || seen[s]) continue;
            std::uint32_t len = 0;
            std::uint32_t cur = s;
            do {
                seen[cur] = 1;
                ++len;
                cur = succ[cur];
            } while (cur != s);
            max_cycle = std::max(max_cycle, len);
        }
    }
};

} // namespace

bool eval(const TruthTable& f, StateVector state) {
    check_state(f, state);
    return f.bit(state.code);
}

StateVector step(const TruthTable& f, StateVector state) {
    check_state(f, state);
    const std::uint32_t next =
        (std::uint32_t(f.bit(state.code)) << (f.n() - 1)) | (state.code >> 1);
    return StateVector{state.n, next};
}

std::vector<StateVector> predecessors(const TruthTable& f, StateVector state) {
    check_state(f, state);
    const int n = f.n();
    const std::uint32_t suffix = state.code & ((1u << (n - 1)) - 1);
    const bool newest = (state.code >> (n - 1)) & 1;

    std::vector<StateVector> preds;
    for (std::uint32_t low = 0; low < 2; ++low) {
        const std::uint32_t p = (suffix << 1) | low;
        if (f.bit(p) == newest) preds.push_back(StateVector{n, p});
    }
    return preds;
}

std::vector<StateVector> orbit(const TruthTable& f, StateVector start,
                               std::uint64_t steps) {
    check_state(f, start);
    std::vector<StateVector> path;
    path.reserve(steps + 1);
    path.push_back(start);
    for (std::uint64_t i = 0; i < steps; ++i) {
        path.push_back(step(f, path.back()));
    }
    return path;
}

StateAnalysis analyze(const TruthTable& f) {
    const std::uint32_t size = f.size();
    GraphScan scan;
    scan.run(f);

    StateAnalysis a;
    a.n = f.n();
    a.successor = std::move(scan.succ);
    a.goe_count_d = scan.goe_count;
    a.max_cycle_r = scan.max_cycle;

    a.classes.resize(size);
    for (std::uint32_t s = 0; s < size; ++s) {
        if (!scan.off_cycle[s]) {
            a.classes[s] = StateClass::Periodic;
        } else if (scan.goe[s]) {
            a.classes[s] = StateClass::GardenOfEden;
        } else {
            a.classes[s] = StateClass::Transient;
        }
    }

    // Ascending scan makes each cycle start at its smallest code and orders
    // the cycle list by that code.
    std::vector<std::uint8_t> visited(size, 0);
    for (std::uint32_t s = 0; s < size; ++s) {
        if (scan.off_cycle[s] || visited[s]) continue;
        std::vector<std::uint32_t> cycle;
        std::uint32_t cur = s;
        do {
            visited[cur] = 1;
            cycle.push_back(cur);
            cur = a.successor[cur];
        } while (cur != s);
        a.cycles.push_back(std::move(cycle));
    }
    return a;
}

CycleGoeSummary cycle_goe_summary(const TruthTable& f) {
    thread_local GraphScan scan;
    scan.run(f);
    return CycleGoeSummary{scan.max_cycle, scan.goe_count};
}

std::string format_state_tuple(StateVector state) {
    std::string out = "(";
    for (int b = state.n - 1; b >= 0; --b) {
        out += ((state.code >> b) & 1) ? '1' : '0';
        if (b > 0) out += ',';
    }
    out += ')';
    return out;
}

} // namespace nfsr
