#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "idparity/checksum.hpp"
#include "idparity/distribution.hpp"
#include "idparity/oracle.hpp"

namespace idparity {

// A synthetic population to draw IDs from: letter frequencies, one PMF per
// data position a1..a8, the checksum convention, and the sampling budget.
// The check digit of every sampled ID is computed, never sampled.
struct PopulationSpec {
    std::map<char, double> letter_weights; // must sum to 1 within 1e-9
    std::array<DigitDistribution, 8> position_dists;
    ChecksumConvention convention = ChecksumConvention::paper;
    std::uint64_t seed = 0;
    std::uint64_t size = 1;
};

// Throws InvalidWeights / ConfigError if the spec violates its invariants.
void check_population_spec(const PopulationSpec& spec);

struct LetterCounts {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
};

struct PopulationSummary {
    std::string rng_algorithm; // recorded so runs are reproducible
    std::uint64_t seed = 0;
    std::uint64_t size = 0;
    ChecksumConvention convention = ChecksumConvention::paper;
    std::uint64_t even_count = 0;
    std::uint64_t odd_count = 0;
    std::map<char, LetterCounts> per_letter;
};

// Identifier of the generator backing sample_population. Sequences are
// stable for a given seed within this implementation; bit-identity across
// other implementations is not promised.
inline constexpr const char* kRngAlgorithm = "mt19937_64";

// Draws spec.size IDs. Deterministic: the same spec yields the same
// summary and the same ID stream. on_id, when set, receives every
// generated ID in order.
PopulationSummary sample_population(const PopulationSpec& spec,
                                    const std::function<void(const IdNumber&)>& on_id = {});

struct MonteCarloEstimate {
    double p_hat = 0.0;   // even count / size
    double ci_low = 0.0;  // 95% normal-approximation interval
    double ci_high = 0.0;
    PopulationSummary summary;
};

// Requires spec.size >= 100.
MonteCarloEstimate monte_carlo_p(const PopulationSpec& spec);

// Exact P{last digit even} for the spec: the letter-weight mixture of
// per-letter enumeration values over positions 2, 4, 6, 8.
double exact_p_mixture(const PopulationSpec& spec);

} // namespace idparity
