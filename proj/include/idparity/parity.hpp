#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "idparity/alphabet.hpp"

namespace idparity {

// Per-variable probabilities q_k = P{x_k = 0} (equivalently, P{digit k is
// even}) feeding the even-sum formula. Validated on construction: every
// entry in [0,1], at least one entry.
class BiasVector {
public:
    explicit BiasVector(std::vector<double> q);

    std::size_t size() const noexcept { return q_.size(); }
    double operator[](std::size_t i) const noexcept { return q_[i]; }
    std::span<const double> values() const noexcept { return q_; }

    auto begin() const noexcept { return q_.begin(); }
    auto end() const noexcept { return q_.end(); }

private:
    std::vector<double> q_;
};

enum class FairnessMethod { closed_form, expansion, enumeration, monte_carlo };
enum class FairnessVerdict { fair, biased };

const char* fairness_method_name(FairnessMethod method) noexcept;

// p is the probability that the last digit is even. verdict is fair iff
// |p - 1/2| < epsilon. corollary_flag reports whether some q_k sits within
// 1e-12 of 1/2, which forces p = 1/2 exactly.
struct FairnessReport {
    double p;
    FairnessMethod method;
    double epsilon;
    FairnessVerdict verdict;
    bool corollary_flag;
};

// Tolerance for flagging a q_k as "exactly one half" in reports.
inline constexpr double kCorollaryTolerance = 1e-12;

// The letter's fixed parity contribution, ((alpha - 11*alpha') / 10) mod 2.
int letter_parity_constant(const AlphaCode& code) noexcept;

// Parity of the check digit from the letter and the parities of digits
// 2, 4, 6 and 8 alone; the other positions carry even weights and drop out
// mod 2. Identical under both checksum conventions.
int predict_last_parity(const AlphaCode& code, int b2, int b4, int b6, int b8);

// P{ x_1 + ... + x_f = 0 mod 2 } for independent bits with
// P{x_k = 0} = q_k:
//
//   p = 2^(f-1) * prod_k (q_k - 1/2) + 1/2
//
// The deviation from 1/2 shrinks geometrically with every factor; a single
// q_k = 1/2 pins p to 1/2 exactly.
double even_sum_probability(const BiasVector& bias);

// P{ an even number of ones } among m independent bits that are each 1
// with probability q: (1 + (1 - 2q)^m) / 2. Equals
// even_sum_probability with q_k = 1 - q repeated m times.
double gallager_even_ones(int m, double q);

// The literal 8-term sum over all assignments of even/odd to positions
// 2,4,6,8 with an even number of odd positions. Deliberately computed term
// by term, not via even_sum_probability, so the two act as mutual oracles.
double problem2_expansion(double p2, double p4, double p6, double p8);

// Fairness of one letter's population: p = even-sum probability of the
// four relevant digit parities, flipped when the letter's parity constant
// is odd. bias must have exactly four entries (positions 2, 4, 6, 8).
FairnessReport region_fairness(const AlphaCode& code, const BiasVector& bias, double epsilon);

inline constexpr double kDefaultEpsilon = 1e-3;

// Checks the iff "p != 1/2 <=> no q_k = 1/2" on this input. The left side
// is decided by an exact zero test on prod(q_k - 1/2), not by comparing
// the rounded p against 0.5.
bool corollary_holds(const BiasVector& bias);

} // namespace idparity
