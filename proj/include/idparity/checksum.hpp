#pragma once

#include <array>
#include <string_view>

#include "idparity/id_number.hpp"

namespace idparity {

// Two published conventions for the check digit.
//
//   paper       a9 = weighted_sum(code, a1..a8) mod 10. The formula as it
//               appears in print.
//   complement  a9 = (10 - weighted_sum) mod 10. The deployed national
//               scheme, in which the full weighted total including a9 is
//               divisible by 10.
//
// The two differ only by sign mod 10 and therefore agree on the parity of
// a9 for every input; all fairness results hold under either.
enum class ChecksumConvention { paper, complement };

// "paper" / "complement"; nullptr-safe round trip with parse_convention.
const char* convention_name(ChecksumConvention conv) noexcept;
ChecksumConvention parse_convention(std::string_view name); // throws ConfigError

// ((alpha - alpha') / 10 + 9*alpha' + sum_{i=1..8} (9-i)*a_i) mod 10,
// least non-negative. Pure integer arithmetic.
int weighted_sum(const AlphaCode& code, const std::array<int, 8>& digits);

int check_digit(const AlphaCode& code, const std::array<int, 8>& digits,
                ChecksumConvention conv = ChecksumConvention::paper);

bool validate(const IdNumber& id, ChecksumConvention conv = ChecksumConvention::paper);

// The unique IdNumber extending the prefix that validates under conv.
IdNumber complete(const AlphaCode& code, const std::array<int, 8>& digits,
                  ChecksumConvention conv = ChecksumConvention::paper);

} // namespace idparity
