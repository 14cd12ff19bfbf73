#pragma once

#include <array>
#include <string>
#include <string_view>

#include "idparity/alphabet.hpp"

namespace idparity {

struct ParseOptions {
    // Accept a..z by folding to A..Z. Off by default: the grammar wants a
    // capital letter.
    bool fold_case = false;
    // Restrict the first digit to {1, 2}. Off by default: the grammar only
    // promises digits 0..9.
    bool strict_first_digit = false;
};

// A structurally valid ID: one letter plus nine digits. Checksum validity
// is a separate question (see checksum.hpp); an IdNumber may well fail it.
struct IdNumber {
    AlphaCode code;
    std::array<int, 9> digits; // a1..a9, each 0..9

    bool operator==(const IdNumber&) const = default;
};

// Per-digit parities of an IdNumber: bits[i] = digits[i] mod 2.
struct ParityVector {
    std::array<int, 9> bits;

    bool operator==(const ParityVector&) const = default;
};

// Parses text against the grammar ^[A-Z][0-9]{9}$. Does not check the
// checksum. Throws ParseError with the offending 0-based position.
IdNumber parse_id(std::string_view text, const ParseOptions& options = {});

// A letter plus the eight data digits, ready for checksum completion.
struct IdPrefix {
    AlphaCode code;
    std::array<int, 8> digits; // a1..a8
};

// Parses ^[A-Z][0-9]{8}$ (an ID missing its check digit).
IdPrefix parse_id_prefix(std::string_view text, const ParseOptions& options = {});

// Inverse of parse_id: "A123456781" style.
std::string format_id(const IdNumber& id);

ParityVector parity_vector(const IdNumber& id);

// The first eight digits, as consumed by the checksum functions.
std::array<int, 8> id_prefix(const IdNumber& id);

} // namespace idparity
