#include "idparity/alphabet.hpp"

#include <string>

namespace idparity {

AlphaCode letter_to_alpha(char letter, bool fold_case) {
    char c = letter;
    if (fold_case && c >= 'a' && c <= 'z') {
        c = static_cast<char>(c - 'a' + 'A');
    }
    if (!is_capital_letter(c)) {
        throw ParseError(ParseError::Kind::not_a_capital_letter, 0,
                         "expected a capital letter A-Z, got '" + std::string(1, letter) + "'");
    }
    return alpha_code_unchecked(c);
}

std::array<AlphaCode, 26> all_alpha_codes() {
    std::array<AlphaCode, 26> codes{};
    for (int i = 0; i < 26; ++i) {
        codes[static_cast<std::size_t>(i)] = alpha_code_unchecked(static_cast<char>('A' + i));
    }
    return codes;
}

} // namespace idparity
