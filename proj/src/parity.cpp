#include "idparity/parity.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace idparity {

BiasVector::BiasVector(std::vector<double> q) : q_(std::move(q)) {
    if (q_.empty()) {
        throw std::invalid_argument("BiasVector: need at least one entry");
    }
    for (std::size_t i = 0; i < q_.size(); ++i) {
        if (!(q_[i] >= 0.0 && q_[i] <= 1.0)) {
            throw BiasOutOfRange("q[" + std::to_string(i) + "] = " + std::to_string(q_[i]) +
                                 " is outside [0,1]");
        }
    }
}

const char* fairness_method_name(FairnessMethod method) noexcept {
    switch (method) {
    case FairnessMethod::closed_form: return "closed_form";
    case FairnessMethod::expansion: return "expansion";
    case FairnessMethod::enumeration: return "enumeration";
    case FairnessMethod::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

int letter_parity_constant(const AlphaCode& code) noexcept {
    return code.parity_constant;
}

int predict_last_parity(const AlphaCode& code, int b2, int b4, int b6, int b8) {
    assert(b2 == (b2 & 1) && b4 == (b4 & 1) && b6 == (b6 & 1) && b8 == (b8 & 1));
    return mod_floor(code.parity_constant + b2 + b4 + b6 + b8, 2);
}

double even_sum_probability(const BiasVector& bias) {
    double prod = 1.0;
    for (double q : bias) {
        prod *= q - 0.5;
    }
    // 2^(f-1) * prod, exactly.
    const double p = std::ldexp(prod, static_cast<int>(bias.size()) - 1) + 0.5;
    assert(p >= 0.0 && p <= 1.0);
    return p;
}

double gallager_even_ones(int m, double q) {
    if (m < 1) {
        throw std::invalid_argument("gallager_even_ones: m must be >= 1");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw BiasOutOfRange("q = " + std::to_string(q) + " is outside [0,1]");
    }
    const double base = 1.0 - 2.0 * q;
    double power = 1.0;
    for (int i = 0; i < m; ++i) {
        power *= base;
    }
    return (1.0 + power) / 2.0;
}

double problem2_expansion(double p2, double p4, double p6, double p8) {
    for (double p : {p2, p4, p6, p8}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw BiasOutOfRange("probability " + std::to_string(p) + " is outside [0,1]");
        }
    }
    const double r2 = 1.0 - p2, r4 = 1.0 - p4, r6 = 1.0 - p6, r8 = 1.0 - p8;
    return p2 * p4 * p6 * p8      // 0 odd
         + p2 * p4 * r6 * r8      // 2 odd
         + p2 * r4 * p6 * r8
         + p2 * r4 * r6 * p8
         + r2 * p4 * p6 * r8
         + r2 * p4 * r6 * p8
         + r2 * r4 * p6 * p8
         + r2 * r4 * r6 * r8;     // 4 odd
}

FairnessReport region_fairness(const AlphaCode& code, const BiasVector& bias, double epsilon) {
    if (bias.size() != 4) {
        throw std::invalid_argument("region_fairness: bias must have exactly 4 entries, got " +
                                    std::to_string(bias.size()));
    }
    const double p_even_sum = even_sum_probability(bias);
    const double p = code.parity_constant == 0 ? p_even_sum : 1.0 - p_even_sum;
    bool near_half = false;
    for (double q : bias) {
        near_half = near_half || std::abs(q - 0.5) <= kCorollaryTolerance;
    }
    return FairnessReport{
        p,
        FairnessMethod::closed_form,
        epsilon,
        std::abs(p - 0.5) < epsilon ? FairnessVerdict::fair : FairnessVerdict::biased,
        near_half,
    };
}

bool corollary_holds(const BiasVector& bias) {
    double prod = 1.0;
    bool any_half = false;
    for (double q : bias) {
        prod *= q - 0.5;
        any_half = any_half || q == 0.5;
    }
    const bool p_is_half = prod == 0.0;
    const bool all_away_from_half = !any_half;
    return (!p_is_half) == all_away_from_half;
}

} // namespace idparity
