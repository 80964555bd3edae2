#include "nfsr/truth_table.hpp"

#include <algorithm>

namespace nfsr {

namespace {

void check_n(int n) {
    if (n < 1 || n > 16) {
        throw std::invalid_argument("variable count must be in [1, 16], got " +
                                    std::to_string(n));
    }
}

std::size_t word_count(int n) {
    return std::max<std::size_t>(1, (std::size_t(1) << n) / 64);
}

std::uint32_t hex_digit_count(int n) {
    return std::max<std::uint32_t>(1, (1u << n) / 4);
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

TruthTable::TruthTable(int n) : n_(n) {
    check_n(n);
    words_.assign(word_count(n), 0);
}

TruthTable::TruthTable(int n, const std::vector<bool>& bits) : TruthTable(n) {
    if (bits.size() != size()) {
        throw std::invalid_argument("expected " + std::to_string(size()) +
                                    " bits, got " + std::to_string(bits.size()));
    }
    for (std::uint32_t i = 0; i < size(); ++i) {
        if (bits[i]) words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
}

TruthTable TruthTable::from_code(int n, std::uint64_t code) {
    check_n(n);
    if (n > 6) {
        throw std::invalid_argument("from_code requires n <= 6");
    }
    TruthTable f(n);
    if (n < 6 && (code >> f.size()) != 0) {
        throw std::invalid_argument("code does not fit in " +
                                    std::to_string(f.size()) + " bits");
    }
    f.words_[0] = code;
    return f;
}

std::uint64_t TruthTable::code() const {
    if (n_ > 6) {
        throw std::invalid_argument("code() requires n <= 6");
    }
    return words_[0];
}

void TruthTable::set_bit(std::uint32_t row, bool value) {
    check_row(row);
    const std::uint64_t mask = std::uint64_t(1) << (row & 63);
    if (value) {
        words_[row >> 6] |= mask;
    } else {
        words_[row >> 6] &= ~mask;
    }
}

void TruthTable::flip_bit(std::uint32_t row) {
    check_row(row);
    words_[row >> 6] ^= std::uint64_t(1) << (row & 63);
}

std::uint64_t TruthTable::last_word_mask() const {
    const std::uint32_t used = size() & 63;
    return used == 0 ? ~std::uint64_t(0) : (std::uint64_t(1) << used) - 1;
}

void TruthTable::check_row(std::uint32_t row) const {
    if (row >= size()) {
        throw std::out_of_range("row " + std::to_string(row) +
                                " out of range for n=" + std::to_string(n_));
    }
}

TruthTable parse_truth_table(const std::string& text, int n) {
    check_n(n);
    const std::uint32_t size = 1u << n;

    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        const std::uint32_t digits = hex_digit_count(n);
        if (text.size() - 2 != digits) {
            throw ParseError("hex truth table has " +
                             std::to_string(text.size() - 2) +
                             " digits, expected " + std::to_string(digits) +
                             " for n=" + std::to_string(n));
        }
        TruthTable f(n);
        for (std::uint32_t k = 0; k < digits; ++k) {
            const std::size_t pos = 2 + k;
            const int v = hex_value(text[pos]);
            if (v < 0) {
                throw ParseError("invalid hex digit '" + std::string(1, text[pos]) +
                                 "' at position " + std::to_string(pos), pos);
            }
            const std::uint32_t nibble_base = 4 * (digits - 1 - k);
            for (int b = 0; b < 4; ++b) {
                const std::uint32_t i = nibble_base + b;
                if ((v >> b) & 1) {
                    if (i >= size) {
                        throw ParseError("hex value does not fit in " +
                                         std::to_string(size) +
                                         " bits (digit at position " +
                                         std::to_string(pos) + ")", pos);
                    }
                    f.set_bit(i, true);
                }
            }
        }
        return f;
    }

    if (text.size() != size) {
        throw ParseError("truth table text has " + std::to_string(text.size()) +
                         " characters, expected " + std::to_string(size) +
                         " for n=" + std::to_string(n));
    }
    TruthTable f(n);
    for (std::uint32_t i = 0; i < size; ++i) {
        if (text[i] == '1') {
            f.set_bit(i, true);
        } else if (text[i] != '0') {
            throw ParseError("invalid character '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i), i);
        }
    }
    return f;
}

std::string format_truth_table(const TruthTable& f) {
    std::string out(f.size(), '0');
    for (std::uint32_t i = 0; i < f.size(); ++i) {
        if (f.bit(i)) out[i] = '1';
    }
    return out;
}

std::string format_truth_table_hex(const TruthTable& f) {
    static const char* digits = "0123456789abcdef";
    const std::uint32_t count = hex_digit_count(f.n());
    std::string out = "0x";
    for (std::uint32_t k = 0; k < count; ++k) {
        const std::uint32_t nibble_base = 4 * (count - 1 - k);
        int v = 0;
        for (int b = 3; b >= 0; --b) {
            const std::uint32_t i = nibble_base + b;
            v = (v << 1) | (i < f.size() && f.bit(i) ? 1 : 0);
        }
        out += digits[v];
    }
    return out;
}

} // namespace nfsr
