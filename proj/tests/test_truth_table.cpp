#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "nfsr/rng.hpp"
#include "nfsr/truth_table.hpp"

using namespace nfsr;

TEST_CASE("fresh table is all zeros") {
    TruthTable f(3);
    CHECK(f.n() == 3);
    CHECK(f.size() == 8);
    for (std::uint32_t i = 0; i < 8; ++i) CHECK_FALSE(f.bit(i));
    CHECK(f.code() == 0);
}

TEST_CASE("bit vector constructor matches row order") {
    // Row i of the table is bit i; "01000100" sets rows 1 and 5.
    TruthTable f(3, {false, true, false, false, false, true, false, false});
    CHECK(f.bit(1));
    CHECK(f.bit(5));
    CHECK(f.code() == 34);
    CHECK_THROWS_AS(TruthTable(3, std::vector<bool>(7)), std::invalid_argument);
}

TEST_CASE("variable count bounds") {
    CHECK_THROWS_AS(TruthTable(0), std::invalid_argument);
    CHECK_THROWS_AS(TruthTable(17), std::invalid_argument);
    CHECK(TruthTable(1).size() == 2);
    CHECK(TruthTable(16).size() == 65536);
}

TEST_CASE("code round trip for n <= 6") {
    for (std::uint64_t code = 0; code < 16; ++code) {
        CHECK(TruthTable::from_code(2, code).code() == code);
    }
    CHECK(TruthTable::from_code(3, 34).code() == 34);
    CHECK(TruthTable::from_code(6, ~std::uint64_t(0)).code() == ~std::uint64_t(0));
    CHECK_THROWS_AS(TruthTable::from_code(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(TruthTable::from_code(2, 16), std::invalid_argument);
    CHECK_THROWS_AS(TruthTable(7).code(), std::invalid_argument);
}

TEST_CASE("binary text round trip") {
    const TruthTable f = parse_truth_table("01000100", 3);
    CHECK(f.code() == 34);
    CHECK(format_truth_table(f) == "01000100");
    CHECK(format_truth_table(TruthTable::from_code(2, 0)) == "0000");
}

TEST_CASE("hex text round trip") {
    const TruthTable f = parse_truth_table("0x22", 3);
    CHECK(f.code() == 34);
    CHECK(format_truth_table_hex(f) == "0x22");
    CHECK(parse_truth_table("0X22", 3) == f); // prefix is case-insensitive
    CHECK(parse_truth_table("0xAB", 3).code() == 0xab);

    // n=4 needs exactly four digits; n=1 a single digit covering two bits.
    CHECK(format_truth_table_hex(TruthTable::from_code(4, 0x22)) == "0x0022");
    CHECK(parse_truth_table("0x3", 1).code() == 3);
    CHECK_THROWS_AS(parse_truth_table("0x4", 1), ParseError); // bit 2 of a 2-row table
}

TEST_CASE("binary and hex agree on random tables") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const TruthTable f = random_truth_table(n, rng);
            CHECK(parse_truth_table(format_truth_table(f), n) == f);
            CHECK(parse_truth_table(format_truth_table_hex(f), n) == f);
        }
    }
}

TEST_CASE("parse errors name the offending position") {
    CHECK_THROWS_AS(parse_truth_table("01", 3), ParseError);
    try {
        parse_truth_table("0100x100", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
    try {
        parse_truth_table("0x2g", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    // Length errors have no single offending byte.
    try {
        parse_truth_table("0x222", 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == std::string::npos);
    }
}

TEST_CASE("set flip and bounds") {
    TruthTable f(2);
    f.set_bit(3, true);
    CHECK(f.code() == 8);
    f.flip_bit(3);
    f.flip_bit(0);
    CHECK(f.code() == 1);
    f.set_bit(0, false);
    CHECK(f.code() == 0);
    CHECK_THROWS_AS(f.bit(4), std::out_of_range);
    CHECK_THROWS_AS(f.set_bit(4, true), std::out_of_range);
}

TEST_CASE("word backing stays masked") {
    TruthTable small(3);
    CHECK(small.words().size() == 1);
    CHECK(small.last_word_mask() == 0xff);

    TruthTable exact(6);
    CHECK(exact.words().size() == 1);
    CHECK(exact.last_word_mask() == ~std::uint64_t(0));

    TruthTable wide(7);
    CHECK(wide.words().size() == 2);
    CHECK(wide.last_word_mask() == ~std::uint64_t(0));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const TruthTable f = random_truth_table(3, rng);
        CHECK((f.words()[0] & ~f.last_word_mask()) == 0);
    }
}

TEST_CASE("equality covers width and content") {
    CHECK(TruthTable::from_code(3, 34) == parse_truth_table("01000100", 3));
    CHECK_FALSE(TruthTable(2) == TruthTable(3));
    CHECK_FALSE(TruthTable::from_code(3, 34) == TruthTable::from_code(3, 35));
}
