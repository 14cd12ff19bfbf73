#include "idparity/checksum.hpp"

#include <string>

namespace idparity {

const char* convention_name(ChecksumConvention conv) noexcept {
    return conv == ChecksumConvention::paper ? "paper" : "complement";
}

ChecksumConvention parse_convention(std::string_view name) {
    if (name == "paper") return ChecksumConvention::paper;
    if (name == "complement") return ChecksumConvention::complement;
    throw ConfigError("unknown convention '" + std::string(name) +
                      "' (expected \"paper\" or \"complement\")");
}

int weighted_sum(const AlphaCode& code, const std::array<int, 8>& digits) {
    int sum = code.tens_term + 9 * code.alpha_prime;
    for (int i = 0; i < 8; ++i) {
        sum += (8 - i) * digits[static_cast<std::size_t>(i)]; // weight 9-(i+1)
    }
    return mod_floor(sum, 10);
}

int check_digit(const AlphaCode& code, const std::array<int, 8>& digits,
                ChecksumConvention conv) {
    const int s = weighted_sum(code, digits);
    return conv == ChecksumConvention::paper ? s : mod_floor(10 - s, 10);
}

bool validate(const IdNumber& id, ChecksumConvention conv) {
    return id.digits[8] == check_digit(id.code, id_prefix(id), conv);
}

IdNumber complete(const AlphaCode& code, const std::array<int, 8>& digits,
                  ChecksumConvention conv) {
    IdNumber id{code, {}};
    for (std::size_t i = 0; i < 8; ++i) {
        id.digits[i] = digits[i];
    }
    id.digits[8] = check_digit(code, digits, conv);
    return id;
}

} // namespace idparity
