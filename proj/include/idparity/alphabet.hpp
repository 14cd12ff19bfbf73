#pragma once

#include <array>

#include "idparity/errors.hpp"

namespace idparity {

// A leading capital letter together with the integer code it maps to and
// the constants derived from that code. The national scheme assigns every
// letter A..Z a two-digit code in 10..35; the assignment is historical and
// not alphabetical past H (I and O map to 34 and 35, W to 32, Z to 33).
//
// Derived fields:
//   alpha_prime     alpha mod 10 (the code's unit digit)
//   tens_term       (alpha - alpha_prime) / 10 (the code's tens digit, 1..3)
//   parity_constant ((alpha - 11*alpha_prime) / 10) mod 2, least non-negative.
//                   This is the letter's fixed contribution to the parity of
//                   the check digit; see parity.hpp.
struct AlphaCode {
    char letter;
    int alpha;
    int alpha_prime;
    int tens_term;
    int parity_constant;

    bool operator==(const AlphaCode&) const = default;
};

inline constexpr std::array<int, 26> kLetterCodes = {
    10, 11, 12, 13, 14, 15, 16, 17, 34, 18, 19, 20, 21,
    22, 35, 23, 24, 25, 26, 27, 28, 29, 32, 30, 31, 33,
};

constexpr bool is_capital_letter(char c) noexcept { return c >= 'A' && c <= 'Z'; }

// Least non-negative residue; C++ % is truncated and can return negatives.
constexpr int mod_floor(int value, int modulus) noexcept {
    int r = value % modulus;
    return r < 0 ? r + modulus : r;
}

constexpr AlphaCode alpha_code_unchecked(char letter) noexcept {
    const int alpha = kLetterCodes[static_cast<std::size_t>(letter - 'A')];
    const int alpha_prime = alpha % 10;
    const int tens_term = (alpha - alpha_prime) / 10;
    const int parity_constant = mod_floor((alpha - 11 * alpha_prime) / 10, 2);
    return AlphaCode{letter, alpha, alpha_prime, tens_term, parity_constant};
}

// Maps a letter to its AlphaCode. Lowercase input is rejected unless
// fold_case is set, in which case a..z are treated as A..Z.
AlphaCode letter_to_alpha(char letter, bool fold_case = false);

// All 26 codes in letter order, for sweeps.
std::array<AlphaCode, 26> all_alpha_codes();

} // namespace idparity
