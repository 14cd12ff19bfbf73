#include "idparity/id_number.hpp"

#include <string>

namespace idparity {

namespace {

template <std::size_t N>
std::pair<AlphaCode, std::array<int, N>> parse_letter_and_digits(std::string_view text,
                                                                 const ParseOptions& options) {
    if (text.size() != N + 1) {
        throw ParseError(ParseError::Kind::bad_length, 0,
                         "expected 1 letter + " + std::to_string(N) + " digits, got " +
                             std::to_string(text.size()) + " characters");
    }
    AlphaCode code = letter_to_alpha(text[0], options.fold_case);
    std::array<int, N> digits{};
    for (std::size_t i = 1; i <= N; ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') {
            throw ParseError(ParseError::Kind::non_digit_character, i,
                             "expected a digit at position " + std::to_string(i) + ", got '" +
                                 std::string(1, c) + "'");
        }
        digits[i - 1] = c - '0';
    }
    if (options.strict_first_digit && digits[0] != 1 && digits[0] != 2) {
        throw ParseError(ParseError::Kind::first_digit_range, 1,
                         "first digit must be 1 or 2 in strict mode, got " +
                             std::to_string(digits[0]));
    }
    return {code, digits};
}

} // namespace

IdNumber parse_id(std::string_view text, const ParseOptions& options) {
    auto [code, digits] = parse_letter_and_digits<9>(text, options);
    return IdNumber{code, digits};
}

IdPrefix parse_id_prefix(std::string_view text, const ParseOptions& options) {
    auto [code, digits] = parse_letter_and_digits<8>(text, options);
    return IdPrefix{code, digits};
}

std::string format_id(const IdNumber& id) {
    std::string out;
    out.reserve(10);
    out.push_back(id.code.letter);
    for (int d : id.digits) {
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

ParityVector parity_vector(const IdNumber& id) {
    ParityVector pv{};
    for (std::size_t i = 0; i < 9; ++i) {
        pv.bits[i] = mod_floor(id.digits[i], 2);
    }
    return pv;
}

std::array<int, 8> id_prefix(const IdNumber& id) {
    std::array<int, 8> prefix{};
    for (std::size_t i = 0; i < 8; ++i) {
        prefix[i] = id.digits[i];
    }
    return prefix;
}

} // namespace idparity
