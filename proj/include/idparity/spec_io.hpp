#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "idparity/parity.hpp"
#include "idparity/population.hpp"

namespace idparity {

// PopulationSpec JSON document:
//
//   {
//     "letter_weights": {"O": 0.9, "A": 0.1},
//     "position_dists": [[w0..w9], ... 8 arrays, positions a1..a8],
//     "convention": "paper" | "complement",
//     "seed": 42,
//     "size": 100000,
//     "renormalize": false            // optional; scale each PMF to sum 1
//   }
//
// With "renormalize" the PMF rows may hold arbitrary non-negative weights,
// e.g. [1,1,1,0,0,0,0,0,0,0] for "uniform over 0..2".
PopulationSpec population_spec_from_json(const nlohmann::json& doc);
PopulationSpec load_population_spec(const std::filesystem::path& path);
nlohmann::json population_spec_to_json(const PopulationSpec& spec);

// Distribution file for the enumeration oracle. Accepts three shapes:
//   - an array of 4 PMF rows: positions 2, 4, 6, 8 directly;
//   - an array of 8 PMF rows: positions 1..8, rows 2,4,6,8 extracted
//     (and the full set kept for the full sweep);
//   - an object with a "position_dists" member of 8 rows (a PopulationSpec
//     document works as-is), plus optional "renormalize".
struct OracleDists {
    std::array<DigitDistribution, 4> even_positions;
    std::optional<std::array<DigitDistribution, 8>> all_positions;
};
OracleDists oracle_dists_from_json(const nlohmann::json& doc);
OracleDists load_oracle_dists(const std::filesystem::path& path);

// Command-line probability syntax: a plain decimal ("0.25") or an exact
// fraction of non-negative integers ("2/3"). Throws ConfigError on
// malformed text; range checking is the consumer's job.
double parse_probability(std::string_view text);
std::vector<double> parse_probability_list(std::string_view text); // comma separated

nlohmann::json summary_to_json(const PopulationSummary& summary);
nlohmann::json estimate_to_json(const MonteCarloEstimate& estimate);
nlohmann::json report_to_json(const FairnessReport& report);

// CSV exports, `\n` line endings, header row first.
std::string weekday_load_csv(const std::array<double, 7>& load);
std::string letter_counts_csv(const PopulationSummary& summary);

} // namespace idparity
