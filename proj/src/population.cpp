#include "idparity/population.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace idparity {

void check_population_spec(const PopulationSpec& spec) {
    if (spec.letter_weights.empty()) {
        throw InvalidWeights("letter_weights is empty");
    }
    double sum = 0.0;
    for (const auto& [letter, weight] : spec.letter_weights) {
        if (!is_capital_letter(letter)) {
            throw InvalidWeights(std::string("letter '") + letter + "' is not A-Z");
        }
        if (!(weight >= 0.0) || !std::isfinite(weight)) {
            throw InvalidWeights(std::string("weight for '") + letter + "' is " +
                                 std::to_string(weight));
        }
        sum += weight;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw InvalidWeights("letter weights sum to " + std::to_string(sum) + ", expected 1");
    }
    if (spec.size < 1) {
        throw ConfigError("population size must be >= 1");
    }
}

namespace {

double next_unit(std::mt19937_64& gen) {
    // 53 random bits -> [0, 1).
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Inverse-CDF draw over a small cumulative table. The table's last entry
// may fall a few ulps short of 1; such a u lands on the final bucket.
template <typename Value>
const Value& pick(const std::vector<std::pair<Value, double>>& cumulative, double u) {
    for (const auto& [value, cum] : cumulative) {
        if (u < cum) {
            return value;
        }
    }
    return cumulative.back().first;
}

} // namespace

PopulationSummary sample_population(const PopulationSpec& spec,
                                    const std::function<void(const IdNumber&)>& on_id) {
    check_population_spec(spec);

    // Letters in sorted order; zero-weight letters never get picked but we
    // drop them anyway so the final bucket has mass.
    std::vector<std::pair<char, double>> letter_cdf;
    double cum = 0.0;
    for (const auto& [letter, weight] : spec.letter_weights) {
        if (weight == 0.0) continue;
        cum += weight;
        letter_cdf.emplace_back(letter, cum);
    }

    std::array<std::vector<std::pair<int, double>>, 8> digit_cdfs;
    for (std::size_t pos = 0; pos < 8; ++pos) {
        double c = 0.0;
        for (int d = 0; d < 10; ++d) {
            const double w = spec.position_dists[pos][d];
            if (w == 0.0) continue;
            c += w;
            digit_cdfs[pos].emplace_back(d, c);
        }
    }

    std::mt19937_64 gen(spec.seed);
    PopulationSummary summary;
    summary.rng_algorithm = kRngAlgorithm;
    summary.seed = spec.seed;
    summary.size = spec.size;
    summary.convention = spec.convention;

    for (std::uint64_t n = 0; n < spec.size; ++n) {
        const char letter = pick(letter_cdf, next_unit(gen));
        std::array<int, 8> prefix{};
        for (std::size_t pos = 0; pos < 8; ++pos) {
            prefix[pos] = pick(digit_cdfs[pos], next_unit(gen));
        }
        const IdNumber id = complete(alpha_code_unchecked(letter), prefix, spec.convention);
        auto& counts = summary.per_letter[letter];
        if (id.digits[8] % 2 == 0) {
            ++summary.even_count;
            ++counts.even;
        } else {
            ++summary.odd_count;
            ++counts.odd;
        }
        if (on_id) {
            on_id(id);
        }
    }
    return summary;
}

MonteCarloEstimate monte_carlo_p(const PopulationSpec& spec) {
    if (spec.size < 100) {
        throw std::invalid_argument("monte_carlo_p: size must be >= 100, got " +
                                    std::to_string(spec.size));
    }
    MonteCarloEstimate est;
    est.summary = sample_population(spec);
    const double n = static_cast<double>(spec.size);
    est.p_hat = static_cast<double>(est.summary.even_count) / n;
    const double half_width = 1.96 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / n);
    est.ci_low = est.p_hat - half_width;
    est.ci_high = est.p_hat + half_width;
    return est;
}

double exact_p_mixture(const PopulationSpec& spec) {
    check_population_spec(spec);
    const std::array<DigitDistribution, 4> even_position_dists = {
        spec.position_dists[1], // a2
        spec.position_dists[3], // a4
        spec.position_dists[5], // a6
        spec.position_dists[7], // a8
    };
    double p = 0.0;
    for (const auto& [letter, weight] : spec.letter_weights) {
        if (weight == 0.0) continue;
        p += weight * exact_p(alpha_code_unchecked(letter), even_position_dists);
    }
    return p;
}

} // namespace idparity
