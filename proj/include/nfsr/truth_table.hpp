#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfsr {

// Thrown when truth-table text cannot be parsed. position() is the byte
// offset of the offending character, or npos for length errors.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position = std::string::npos)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An n-variable boolean function stored as its 2^n output bits.
// bit(i) is the function value on row i, where row i's binary expansion is
// the input vector with x_1 as the most significant bit. Doubles as the GA
// chromosome. 1 <= n <= 16.
class TruthTable {
public:
    explicit TruthTable(int n);
    TruthTable(int n, const std::vector<bool>& bits);

    // Whole table as one integer, bit i = bit(i). Only for n <= 6.
    static TruthTable from_code(int n, std::uint64_t code);
    std::uint64_t code() const;

    int n() const { return n_; }
    std::uint32_t size() const { return 1u << n_; }

    bool bit(std::uint32_t row) const {
        check_row(row);
        return (words_[row >> 6] >> (row & 63)) & 1u;
    }
    void set_bit(std::uint32_t row, bool value);
    void flip_bit(std::uint32_t row);

    // Backing words, little-endian: words()[0] holds bits 0..63.
    // Bits at and above size() are always zero.
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    // Mask for the last word; all other words are fully used.
    std::uint64_t last_word_mask() const;

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    void check_row(std::uint32_t row) const;

    int n_;
    std::vector<std::uint64_t> words_;
};

// Accepts either 2^n characters of {0,1} with bit i at position i, or
// "0x"-prefixed hex of the whole table (bit i of the hex value = bit i),
// exactly ceil(2^n / 4) digits.
TruthTable parse_truth_table(const std::string& text, int n);

std::string format_truth_table(const TruthTable& f);
std::string format_truth_table_hex(const TruthTable& f);

} // namespace nfsr
