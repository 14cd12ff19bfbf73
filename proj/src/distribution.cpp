#include "idparity/distribution.hpp"

#include <cmath>
#include <string>

namespace idparity {

DigitDistribution::DigitDistribution(const std::array<double, 10>& pmf, bool renormalize)
    : pmf_(pmf) {
    double sum = 0.0;
    for (int d = 0; d < 10; ++d) {
        const double v = pmf_[static_cast<std::size_t>(d)];
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidPmf("pmf[" + std::to_string(d) + "] = " + std::to_string(v) +
                             " is not a non-negative finite number");
        }
        sum += v;
    }
    if (renormalize) {
        if (sum <= 0.0) {
            throw InvalidPmf("cannot renormalize: total mass is zero");
        }
        for (auto& v : pmf_) {
            v /= sum;
        }
        sum = 0.0;
        for (double v : pmf_) {
            sum += v;
        }
    }
    if (std::abs(sum - 1.0) > kPmfSumTolerance) {
        throw InvalidPmf("pmf sums to " + std::to_string(sum) + ", expected 1");
    }
}

DigitDistribution DigitDistribution::uniform() {
    std::array<double, 10> w{};
    w.fill(1.0);
    return DigitDistribution(w, /*renormalize=*/true);
}

DigitDistribution DigitDistribution::uniform_over(std::initializer_list<int> digits) {
    std::array<double, 10> w{};
    for (int d : digits) {
        if (d < 0 || d > 9) {
            throw InvalidPmf("digit " + std::to_string(d) + " is outside 0..9");
        }
        w[static_cast<std::size_t>(d)] = 1.0;
    }
    return DigitDistribution(w, /*renormalize=*/true);
}

DigitDistribution DigitDistribution::uniform_excluding(int digit) {
    if (digit < 0 || digit > 9) {
        throw InvalidPmf("digit " + std::to_string(digit) + " is outside 0..9");
    }
    std::array<double, 10> w{};
    w.fill(1.0);
    w[static_cast<std::size_t>(digit)] = 0.0;
    return DigitDistribution(w, /*renormalize=*/true);
}

DigitDistribution DigitDistribution::point_mass(int digit) {
    return uniform_over({digit});
}

double digit_even_prob(const DigitDistribution& dist) {
    return dist[0] + dist[2] + dist[4] + dist[6] + dist[8];
}

} // namespace idparity
