#pragma once

#include <array>
#include <initializer_list>

#include "idparity/errors.hpp"

namespace idparity {

// A probability mass function over the digits 0..9 for one ID position.
// Entries must be non-negative and sum to 1 within kPmfSumTolerance; pass
// renormalize to scale an arbitrary non-negative weight vector first, e.g.
// {1,1,1,0,...} for "uniform over 0..2".
class DigitDistribution {
public:
    static constexpr double kPmfSumTolerance = 1e-9;

    DigitDistribution() { pmf_.fill(0.1); } // uniform
    explicit DigitDistribution(const std::array<double, 10>& pmf, bool renormalize = false);

    static DigitDistribution uniform();
    static DigitDistribution uniform_over(std::initializer_list<int> digits);
    static DigitDistribution uniform_excluding(int digit);
    static DigitDistribution point_mass(int digit);

    double operator[](int digit) const noexcept { return pmf_[static_cast<std::size_t>(digit)]; }
    const std::array<double, 10>& pmf() const noexcept { return pmf_; }

    bool operator==(const DigitDistribution&) const = default;

private:
    std::array<double, 10> pmf_;
};

// P{digit is even} under the PMF: pmf(0)+pmf(2)+pmf(4)+pmf(6)+pmf(8).
double digit_even_prob(const DigitDistribution& dist);

} // namespace idparity
