#pragma once

#include <array>

#include "idparity/checksum.hpp"
#include "idparity/distribution.hpp"
#include "idparity/parity.hpp"

namespace idparity {

// Exact P{last digit even} for a fixed letter, by enumerating all 10^4
// assignments of digits 2, 4, 6, 8 and weighting each by the product of
// its PMFs. Positions 1, 3, 5, 7 carry even checksum weights and cannot
// affect the parity, so they are not enumerated. Exact up to floating
// summation; independent of the closed form in parity.hpp.
double exact_p(const AlphaCode& code, const std::array<DigitDistribution, 4>& dists);

// Paranoia variant: enumerates all eight data positions (up to 10^8
// states, zero-mass branches pruned) and takes the parity of the actual
// check digit rather than the four-bit prediction. Slow by design; use it
// to cross-check exact_p when the position-parity reduction itself is in
// doubt.
double exact_p_full(const AlphaCode& code, const std::array<DigitDistribution, 8>& dists,
                    ChecksumConvention conv = ChecksumConvention::paper);

// FairnessReport built from the enumeration rather than the closed form.
FairnessReport enumerate_fairness(const AlphaCode& code,
                                  const std::array<DigitDistribution, 4>& dists,
                                  double epsilon);

} // namespace idparity
