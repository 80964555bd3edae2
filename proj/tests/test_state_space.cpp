#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "nfsr/rng.hpp"
#include "nfsr/state_space.hpp"
#include "nfsr/truth_table.hpp"

using namespace nfsr;

namespace {

// The 3-variable function used as the running example throughout: rows 1 and
// 5 high, i.e. "01000100" / code 34.
TruthTable example_f() { return parse_truth_table("01000100", 3); }

std::vector<std::uint32_t> codes_of(const std::vector<StateVector>& states) {
    std::vector<std::uint32_t> out;
    for (const auto& s : states) out.push_back(s.code);
    return out;
}

} // namespace

TEST_CASE("eval reads the truth-table row named by the state") {
    const TruthTable f = example_f();
    CHECK(eval(f, StateVector{3, 1}));
    CHECK(eval(f, StateVector{3, 5}));
    CHECK_FALSE(eval(f, StateVector{3, 0}));
    CHECK_FALSE(eval(f, StateVector{3, 7}));
}

TEST_CASE("step shifts the new bit in at the top") {
    const TruthTable f = example_f();
    // 1 -> 4 -> 2 -> 1 is the example's 3-cycle; 0 is a fixed point.
    CHECK(step(f, StateVector{3, 1}) == StateVector{3, 4});
    CHECK(step(f, StateVector{3, 4}) == StateVector{3, 2});
    CHECK(step(f, StateVector{3, 2}) == StateVector{3, 1});
    CHECK(step(f, StateVector{3, 0}) == StateVector{3, 0});
    // The two no-predecessor states drain into the cycle.
    CHECK(step(f, StateVector{3, 5}) == StateVector{3, 6});
    CHECK(step(f, StateVector{3, 7}) == StateVector{3, 3});
    CHECK(step(f, StateVector{3, 6}) == StateVector{3, 3});
    CHECK(step(f, StateVector{3, 3}) == StateVector{3, 1});
}

TEST_CASE("width and range violations throw") {
    const TruthTable f = example_f();
    CHECK_THROWS_AS(step(f, StateVector{2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(step(f, StateVector{3, 8}), std::invalid_argument);
    CHECK_THROWS_AS(eval(f, StateVector{4, 0}), std::invalid_argument);
    CHECK_THROWS_AS(predecessors(f, StateVector{2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(orbit(f, StateVector{3, 9}, 1), std::invalid_argument);
}

TEST_CASE("predecessors of the example function") {
    const TruthTable f = example_f();
    CHECK(codes_of(predecessors(f, StateVector{3, 4})) == std::vector<std::uint32_t>{1});
    CHECK(predecessors(f, StateVector{3, 5}).empty());
    CHECK(predecessors(f, StateVector{3, 7}).empty());
    // 3 is reached from both 6 and 7; results come back ascending.
    CHECK(codes_of(predecessors(f, StateVector{3, 3})) ==
          std::vector<std::uint32_t>{6, 7});
}

TEST_CASE("predecessors and step are inverse relations, exhaustively at n=3") {
    for (std::uint64_t code = 0; code < 256; ++code) {
        const TruthTable f = TruthTable::from_code(3, code);
        std::size_t pred_total = 0;
        for (std::uint32_t s = 0; s < 8; ++s) {
            const auto preds = predecessors(f, StateVector{3, s});
            pred_total += preds.size();
            CHECK(std::is_sorted(preds.begin(), preds.end(),
                                 [](StateVector a, StateVector b) {
                                     return a.code < b.code;
                                 }));
            for (const auto& p : preds) {
                CHECK(step(f, p) == StateVector{3, s});
            }
        }
        // Every state has exactly one successor, so predecessor slots total 2^n.
        CHECK(pred_total == 8);
    }
}

TEST_CASE("orbit returns steps + 1 states in transition order") {
    const TruthTable zero(3);
    const auto path = orbit(zero, StateVector{3, 7}, 3);
    CHECK(codes_of(path) == std::vector<std::uint32_t>{7, 3, 1, 0});
    CHECK(orbit(zero, StateVector{3, 7}, 0).size() == 1);
}

TEST_CASE("analysis of the example function") {
    const StateAnalysis a = analyze(example_f());
    CHECK(a.n == 3);
    CHECK(a.max_cycle_r == 3);
    CHECK(a.goe_count_d == 2);
    REQUIRE(a.cycles.size() == 2);
    CHECK(a.cycles[0] == std::vector<std::uint32_t>{0});
    CHECK(a.cycles[1] == std::vector<std::uint32_t>{1, 4, 2});

    const std::vector<StateClass> want{
        StateClass::Periodic,     // 0
        StateClass::Periodic,     // 1
        StateClass::Periodic,     // 2
        StateClass::Transient,    // 3
        StateClass::Periodic,     // 4
        StateClass::GardenOfEden, // 5
        StateClass::Transient,    // 6
        StateClass::GardenOfEden, // 7
    };
    CHECK(a.classes == want);
}

TEST_CASE("analysis of the constant-zero function at n=2") {
    const StateAnalysis a = analyze(TruthTable(2));
    CHECK(a.max_cycle_r == 1);
    CHECK(a.goe_count_d == 2);
    REQUIRE(a.cycles.size() == 1);
    CHECK(a.cycles[0] == std::vector<std::uint32_t>{0});
    CHECK(a.classes[0] == StateClass::Periodic);
    CHECK(a.classes[1] == StateClass::Transient);
    CHECK(a.classes[2] == StateClass::GardenOfEden);
    CHECK(a.classes[3] == StateClass::GardenOfEden);
}

TEST_CASE("a pure rotation leaves every state periodic") {
    // Feedback = oldest bit, so stepping rotates the register: no state is
    // ever lost and the longest cycle has length n.
    const StateAnalysis a = analyze(parse_truth_table("0xaa", 3));
    CHECK(a.max_cycle_r == 3);
    CHECK(a.goe_count_d == 0);
    REQUIRE(a.cycles.size() == 4);
    CHECK(a.cycles[0] == std::vector<std::uint32_t>{0});
    CHECK(a.cycles[1] == std::vector<std::uint32_t>{1, 4, 2});
    CHECK(a.cycles[2] == std::vector<std::uint32_t>{3, 5, 6});
    CHECK(a.cycles[3] == std::vector<std::uint32_t>{7});
    for (const StateClass c : a.classes) CHECK(c == StateClass::Periodic);
}

TEST_CASE("all four single-variable functions, by hand") {
    // n=1: the successor of s is just the feedback bit.
    const StateAnalysis f0 = analyze(TruthTable::from_code(1, 0));
    CHECK(f0.max_cycle_r == 1);
    CHECK(f0.goe_count_d == 1);
    CHECK(f0.classes[1] == StateClass::GardenOfEden);

    const StateAnalysis f1 = analyze(TruthTable::from_code(1, 1)); // negation
    CHECK(f1.max_cycle_r == 2);
    CHECK(f1.goe_count_d == 0);
    CHECK(f1.cycles == std::vector<std::vector<std::uint32_t>>{{0, 1}});

    const StateAnalysis f2 = analyze(TruthTable::from_code(1, 2)); // identity
    CHECK(f2.max_cycle_r == 1);
    CHECK(f2.goe_count_d == 0);
    CHECK(f2.cycles.size() == 2);

    const StateAnalysis f3 = analyze(TruthTable::from_code(1, 3));
    CHECK(f3.max_cycle_r == 1);
    CHECK(f3.goe_count_d == 1);
    CHECK(f3.classes[0] == StateClass::GardenOfEden);
}

TEST_CASE("a full-period function cycles through every state") {
    // 1010 at n=2 feeds back the negated oldest bit: 0 -> 2 -> 3 -> 1 -> 0.
    const StateAnalysis a = analyze(parse_truth_table("1010", 2));
    CHECK(a.max_cycle_r == 4);
    CHECK(a.goe_count_d == 0);
    REQUIRE(a.cycles.size() == 1);
    CHECK(a.cycles[0] == std::vector<std::uint32_t>{0, 2, 3, 1});
}

TEST_CASE("analysis internals agree with the stepping primitives") {
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const TruthTable f = random_truth_table(n, rng);
            const StateAnalysis a = analyze(f);
            const std::uint32_t size = f.size();

            REQUIRE(a.successor.size() == size);
            REQUIRE(a.classes.size() == size);
            std::uint32_t goe_seen = 0;
            std::uint32_t periodic_seen = 0;
            for (std::uint32_t s = 0; s < size; ++s) {
                CHECK(a.successor[s] == step(f, StateVector{n, s}).code);
                const auto preds = predecessors(f, StateVector{n, s});
                if (a.classes[s] == StateClass::GardenOfEden) {
                    CHECK(preds.empty());
                    ++goe_seen;
                } else {
                    CHECK_FALSE(preds.empty());
                }
                if (a.classes[s] == StateClass::Periodic) ++periodic_seen;
            }
            CHECK(goe_seen == a.goe_count_d);
            CHECK(a.goe_count_d <= size / 2);

            // Cycles cover exactly the periodic states, follow the transition
            // map, start at their smallest code, and are listed by that code.
            std::uint32_t cycle_states = 0;
            std::uint32_t max_len = 0;
            std::uint32_t last_start = 0;
            bool first_cycle = true;
            for (const auto& cycle : a.cycles) {
                REQUIRE(!cycle.empty());
                CHECK(*std::min_element(cycle.begin(), cycle.end()) == cycle.front());
                if (!first_cycle) CHECK(cycle.front() > last_start);
                last_start = cycle.front();
                first_cycle = false;
                for (std::size_t i = 0; i < cycle.size(); ++i) {
                    CHECK(a.classes[cycle[i]] == StateClass::Periodic);
                    CHECK(a.successor[cycle[i]] == cycle[(i + 1) % cycle.size()]);
                }
                cycle_states += std::uint32_t(cycle.size());
                max_len = std::max(max_len, std::uint32_t(cycle.size()));
            }
            CHECK(cycle_states == periodic_seen);
            CHECK(max_len == a.max_cycle_r);

            const CycleGoeSummary s = cycle_goe_summary(f);
            CHECK(s.max_cycle_r == a.max_cycle_r);
            CHECK(s.goe_count_d == a.goe_count_d);
        }
    }
}

TEST_CASE("every orbit is absorbed into a cycle within 2^n steps") {
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 5; ++n) {
        const std::uint32_t size = 1u << n;
        for (int trial = 0; trial < 40; ++trial) {
            const TruthTable f = random_truth_table(n, rng);
            const StateAnalysis a = analyze(f);
            const StateVector start{n, std::uint32_t(uniform_below(rng, size))};
            const auto path = orbit(f, start, size);
            CHECK(a.classes[path.back().code] == StateClass::Periodic);
        }
    }
}

TEST_CASE("state tuples print newest bit first") {
    CHECK(format_state_tuple(StateVector{3, 5}) == "(1,0,1)");
    CHECK(format_state_tuple(StateVector{3, 0}) == "(0,0,0)");
    CHECK(format_state_tuple(StateVector{3, 4}) == "(1,0,0)");
    CHECK(format_state_tuple(StateVector{1, 1}) == "(1)");
    CHECK(format_state_tuple(StateVector{4, 5}) == "(0,1,0,1)");
}
