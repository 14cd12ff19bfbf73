#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "idparity/population.hpp"
#include "oracles.hpp"

using namespace idparity;

namespace {

PopulationSpec uniform_spec(char letter, std::uint64_t seed, std::uint64_t size) {
    PopulationSpec spec;
    spec.letter_weights = {{letter, 1.0}};
    spec.convention = ChecksumConvention::paper;
    spec.seed = seed;
    spec.size = size;
    return spec; // position_dists default to uniform
}

bool summaries_equal(const PopulationSummary& a, const PopulationSummary& b) {
    return a.rng_algorithm == b.rng_algorithm && a.seed == b.seed && a.size == b.size &&
           a.convention == b.convention && a.even_count == b.even_count &&
           a.odd_count == b.odd_count &&
           std::equal(a.per_letter.begin(), a.per_letter.end(), b.per_letter.begin(),
                      b.per_letter.end(), [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second.even == y.second.even &&
                                 x.second.odd == y.second.odd;
                      });
}

} // namespace

TEST_CASE("size one yields exactly one valid ID") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 987654321ULL}) {
        const auto spec = uniform_spec('O', seed, 1);
        std::vector<IdNumber> ids;
        const auto summary = sample_population(spec, [&](const IdNumber& id) {
            ids.push_back(id);
        });
        REQUIRE(ids.size() == 1);
        CHECK(validate(ids[0], spec.convention));
        CHECK(ids[0].code.letter == 'O');
        CHECK(summary.even_count + summary.odd_count == 1);
    }
}

TEST_CASE("identical specs give identical summaries and streams") {
    const auto spec = uniform_spec('K', 77, 5000);
    std::vector<std::string> first_ids, second_ids;
    const auto first = sample_population(spec, [&](const IdNumber& id) {
        first_ids.push_back(format_id(id));
    });
    const auto second = sample_population(spec, [&](const IdNumber& id) {
        second_ids.push_back(format_id(id));
    });
    CHECK(summaries_equal(first, second));
    CHECK(first_ids == second_ids);
    CHECK(first.rng_algorithm == kRngAlgorithm);
}

TEST_CASE("different seeds give different streams") {
    const auto a = sample_population(uniform_spec('K', 1, 1000));
    const auto b = sample_population(uniform_spec('K', 2, 1000));
    CHECK_FALSE(summaries_equal(a, b));
}

TEST_CASE("every sampled ID validates under the spec convention") {
    for (auto conv : {ChecksumConvention::paper, ChecksumConvention::complement}) {
        auto spec = uniform_spec('A', 13, 10000);
        spec.convention = conv;
        std::uint64_t checked = 0;
        sample_population(spec, [&](const IdNumber& id) {
            ++checked;
            if (!validate(id, conv)) {
                FAIL("invalid ID sampled: " << format_id(id));
            }
        });
        CHECK(checked == spec.size);
    }
}

TEST_CASE("letter frequencies stay within four sigma of their weights") {
    PopulationSpec spec;
    spec.letter_weights = {{'A', 0.25}, {'B', 0.6}, {'O', 0.15}};
    spec.seed = 99;
    spec.size = 100000;
    const auto summary = sample_population(spec);
    const double n = static_cast<double>(spec.size);
    for (const auto& [letter, weight] : spec.letter_weights) {
        const auto it = summary.per_letter.find(letter);
        REQUIRE(it != summary.per_letter.end());
        const double count = static_cast<double>(it->second.even + it->second.odd);
        const double sigma = std::sqrt(n * weight * (1.0 - weight));
        CHECK(std::abs(count - n * weight) <= 4.0 * sigma);
    }
}

TEST_CASE("uniform population lands near one half") {
    const auto spec = uniform_spec('O', 42, 100000);
    const auto summary = sample_population(spec);
    const double p_hat =
        static_cast<double>(summary.even_count) / static_cast<double>(spec.size);
    const double sigma = std::sqrt(0.25 / static_cast<double>(spec.size));
    CHECK(std::abs(p_hat - 0.5) <= 3.0 * sigma);
}

TEST_CASE("monte_carlo_p on point masses gives a zero-width interval") {
    PopulationSpec spec;
    spec.letter_weights = {{'O', 1.0}};
    for (auto& dist : spec.position_dists) {
        dist = DigitDistribution::point_mass(0);
    }
    spec.seed = 5;
    spec.size = 200;
    const auto est = monte_carlo_p(spec);
    CHECK(est.p_hat == 1.0); // O with all zeros: even check digit
    CHECK(est.ci_low == 1.0);
    CHECK(est.ci_high == 1.0);

    spec.letter_weights = {{'A', 1.0}};
    const auto odd_est = monte_carlo_p(spec);
    CHECK(odd_est.p_hat == 0.0);
    CHECK(odd_est.ci_low == 0.0);
    CHECK(odd_est.ci_high == 0.0);
}

TEST_CASE("estimates track the enumeration within four sigma") {
    PopulationSpec spec;
    spec.letter_weights = {{'A', 0.5}, {'O', 0.5}};
    spec.position_dists[1] = DigitDistribution::uniform_over({0, 1, 2});
    spec.position_dists[3] = DigitDistribution::uniform_excluding(4);
    spec.seed = 2024;
    spec.size = 100000;
    const auto est = monte_carlo_p(spec);
    const double exact = exact_p_mixture(spec);
    const double sigma = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(spec.size));
    CHECK(std::abs(est.p_hat - exact) <= 4.0 * sigma);
}

TEST_CASE("the 95% interval covers the true value in at least 90 of 100 seeds") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto est = monte_carlo_p(uniform_spec('O', seed, 100000));
        if (est.ci_low <= 0.5 && 0.5 <= est.ci_high) {
            ++hits;
        }
    }
    CHECK(hits >= 90);
}

TEST_CASE("mixture p is the weighted average of per-letter values") {
    PopulationSpec spec;
    spec.letter_weights = {{'A', 0.3}, {'B', 0.7}};
    for (std::size_t pos : {1, 3, 5, 7}) {
        spec.position_dists[pos] = DigitDistribution::point_mass(0);
    }
    spec.seed = 1;
    spec.size = 100;
    // A (odd constant) forces odd, B (even constant) forces even.
    CHECK(exact_p_mixture(spec) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("spec validation") {
    PopulationSpec spec;
    spec.seed = 1;
    spec.size = 10;
    CHECK_THROWS_AS(check_population_spec(spec), InvalidWeights); // empty weights

    spec.letter_weights = {{'A', 0.5}, {'B', 0.6}};
    CHECK_THROWS_AS(check_population_spec(spec), InvalidWeights); // sums to 1.1

    spec.letter_weights = {{'a', 1.0}};
    CHECK_THROWS_AS(check_population_spec(spec), InvalidWeights); // lowercase

    spec.letter_weights = {{'A', 1.0}};
    CHECK_NOTHROW(check_population_spec(spec));

    spec.size = 0;
    CHECK_THROWS_AS(check_population_spec(spec), ConfigError);

    spec.size = 50;
    CHECK_THROWS_AS(monte_carlo_p(spec), std::invalid_argument); // needs >= 100
}

TEST_CASE("zero-weight letters are never sampled") {
    PopulationSpec spec;
    spec.letter_weights = {{'A', 0.0}, {'B', 1.0}};
    spec.seed = 3;
    spec.size = 1000;
    const auto summary = sample_population(spec);
    CHECK(summary.per_letter.count('A') == 0);
    CHECK(summary.per_letter.at('B').even + summary.per_letter.at('B').odd == 1000);
}
