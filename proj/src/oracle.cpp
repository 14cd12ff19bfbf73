#include "idparity/oracle.hpp"

#include <cmath>

namespace idparity {

double exact_p(const AlphaCode& code, const std::array<DigitDistribution, 4>& dists) {
    double p = 0.0;
    for (int a2 = 0; a2 < 10; ++a2) {
        const double w2 = dists[0][a2];
        if (w2 == 0.0) continue;
        for (int a4 = 0; a4 < 10; ++a4) {
            const double w4 = w2 * dists[1][a4];
            if (w4 == 0.0) continue;
            for (int a6 = 0; a6 < 10; ++a6) {
                const double w6 = w4 * dists[2][a6];
                if (w6 == 0.0) continue;
                for (int a8 = 0; a8 < 10; ++a8) {
                    const double w8 = w6 * dists[3][a8];
                    if (w8 == 0.0) continue;
                    if (predict_last_parity(code, a2 & 1, a4 & 1, a6 & 1, a8 & 1) == 0) {
                        p += w8;
                    }
                }
            }
        }
    }
    return p;
}

namespace {

// Depth-first sweep over positions a1..a8 keeping the partial weighted sum
// (weights 8,7,...,1) and the partial probability mass.
double sweep(const AlphaCode& code, const std::array<DigitDistribution, 8>& dists,
             ChecksumConvention conv, int depth, int partial_sum, double mass) {
    if (depth == 8) {
        const int s = mod_floor(code.tens_term + 9 * code.alpha_prime + partial_sum, 10);
        const int digit = conv == ChecksumConvention::paper ? s : mod_floor(10 - s, 10);
        return digit % 2 == 0 ? mass : 0.0;
    }
    const int weight = 8 - depth;
    double p = 0.0;
    for (int d = 0; d < 10; ++d) {
        const double w = dists[static_cast<std::size_t>(depth)][d];
        if (w == 0.0) continue;
        p += sweep(code, dists, conv, depth + 1, partial_sum + weight * d, mass * w);
    }
    return p;
}

} // namespace

double exact_p_full(const AlphaCode& code, const std::array<DigitDistribution, 8>& dists,
                    ChecksumConvention conv) {
    return sweep(code, dists, conv, 0, 0, 1.0);
}

FairnessReport enumerate_fairness(const AlphaCode& code,
                                  const std::array<DigitDistribution, 4>& dists,
                                  double epsilon) {
    const double p = exact_p(code, dists);
    bool near_half = false;
    for (const auto& dist : dists) {
        near_half = near_half || std::abs(digit_even_prob(dist) - 0.5) <= kCorollaryTolerance;
    }
    return FairnessReport{
        p,
        FairnessMethod::enumeration,
        epsilon,
        std::abs(p - 0.5) < epsilon ? FairnessVerdict::fair : FairnessVerdict::biased,
        near_half,
    };
}

} // namespace idparity
