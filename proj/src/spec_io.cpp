#include "idparity/spec_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "idparity/schedule.hpp"

namespace idparity {

namespace {

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return doc;
}

DigitDistribution pmf_from_json(const nlohmann::json& row, bool renormalize,
                                const std::string& where) {
    if (!row.is_array() || row.size() != 10) {
        throw ConfigError(where + ": expected an array of 10 numbers");
    }
    std::array<double, 10> pmf{};
    for (std::size_t d = 0; d < 10; ++d) {
        if (!row[d].is_number()) {
            throw ConfigError(where + "[" + std::to_string(d) + "]: expected a number");
        }
        pmf[d] = row[d].get<double>();
    }
    return DigitDistribution(pmf, renormalize);
}

template <std::size_t N>
std::array<DigitDistribution, N> pmf_rows(const nlohmann::json& rows, bool renormalize,
                                          const std::string& where) {
    if (!rows.is_array() || rows.size() != N) {
        throw ConfigError(where + ": expected an array of " + std::to_string(N) + " PMF rows");
    }
    std::array<DigitDistribution, N> dists{};
    for (std::size_t i = 0; i < N; ++i) {
        dists[i] = pmf_from_json(rows[i], renormalize, where + "[" + std::to_string(i) + "]");
    }
    return dists;
}

} // namespace

PopulationSpec population_spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ConfigError("population spec: expected a JSON object");
    }
    for (const char* key : {"letter_weights", "position_dists", "convention", "seed", "size"}) {
        if (!doc.contains(key)) {
            throw ConfigError(std::string("population spec: missing \"") + key + "\"");
        }
    }
    const bool renormalize = doc.value("renormalize", false);
    if (!doc.at("convention").is_string()) {
        throw ConfigError("convention: expected a string");
    }

    PopulationSpec spec;
    spec.position_dists = pmf_rows<8>(doc.at("position_dists"), renormalize, "position_dists");
    spec.convention = parse_convention(doc.at("convention").get<std::string>());

    const auto& weights = doc.at("letter_weights");
    if (!weights.is_object()) {
        throw ConfigError("letter_weights: expected an object of letter -> weight");
    }
    for (const auto& [key, value] : weights.items()) {
        if (key.size() != 1 || !is_capital_letter(key[0])) {
            throw InvalidWeights("letter_weights key '" + key + "' is not a capital letter");
        }
        if (!value.is_number()) {
            throw InvalidWeights("letter_weights['" + key + "'] is not a number");
        }
        spec.letter_weights[key[0]] = value.get<double>();
    }

    if (!doc.at("seed").is_number_unsigned()) {
        throw ConfigError("seed: expected a non-negative integer");
    }
    spec.seed = doc.at("seed").get<std::uint64_t>();
    if (!doc.at("size").is_number_unsigned() || doc.at("size").get<std::uint64_t>() < 1) {
        throw ConfigError("size: expected a positive integer");
    }
    spec.size = doc.at("size").get<std::uint64_t>();

    check_population_spec(spec);
    return spec;
}

PopulationSpec load_population_spec(const std::filesystem::path& path) {
    return population_spec_from_json(load_json(path));
}

nlohmann::json population_spec_to_json(const PopulationSpec& spec) {
    nlohmann::json weights = nlohmann::json::object();
    for (const auto& [letter, weight] : spec.letter_weights) {
        weights[std::string(1, letter)] = weight;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& dist : spec.position_dists) {
        rows.push_back(dist.pmf());
    }
    return nlohmann::json{
        {"letter_weights", weights},
        {"position_dists", rows},
        {"convention", convention_name(spec.convention)},
        {"seed", spec.seed},
        {"size", spec.size},
    };
}

OracleDists oracle_dists_from_json(const nlohmann::json& doc) {
    const nlohmann::json* rows = nullptr;
    bool renormalize = false;
    if (doc.is_object()) {
        if (!doc.contains("position_dists")) {
            throw ConfigError("distribution file: object form needs \"position_dists\"");
        }
        rows = &doc.at("position_dists");
        renormalize = doc.value("renormalize", false);
    } else if (doc.is_array()) {
        rows = &doc;
    } else {
        throw ConfigError("distribution file: expected an array or an object");
    }

    if (rows->size() == 4) {
        return OracleDists{pmf_rows<4>(*rows, renormalize, "dists"), std::nullopt};
    }
    if (rows->size() == 8) {
        auto all = pmf_rows<8>(*rows, renormalize, "position_dists");
        return OracleDists{{all[1], all[3], all[5], all[7]}, all};
    }
    throw ConfigError("distribution file: expected 4 rows (positions 2,4,6,8) or 8 rows "
                      "(positions 1..8), got " +
                      std::to_string(rows->size()));
}

OracleDists load_oracle_dists(const std::filesystem::path& path) {
    return oracle_dists_from_json(load_json(path));
}

double parse_probability(std::string_view text) {
    const std::string s(text);
    if (s.empty()) {
        throw ConfigError("empty probability");
    }
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash != std::string::npos) {
            const std::string num_text = s.substr(0, slash);
            const std::string den_text = s.substr(slash + 1);
            const long long num = std::stoll(num_text, &used);
            if (used != num_text.size() || num < 0) {
                throw ConfigError("bad numerator in '" + s + "'");
            }
            const long long den = std::stoll(den_text, &used);
            if (used != den_text.size() || den <= 0) {
                throw ConfigError("bad denominator in '" + s + "'");
            }
            return static_cast<double>(num) / static_cast<double>(den);
        }
        const double value = std::stod(s, &used);
        if (used != s.size()) {
            throw ConfigError("trailing characters in probability '" + s + "'");
        }
        return value;
    } catch (const std::invalid_argument&) {
        throw ConfigError("cannot parse probability '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("probability '" + s + "' is out of range");
    }
}

std::vector<double> parse_probability_list(std::string_view text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        values.push_back(parse_probability(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

nlohmann::json summary_to_json(const PopulationSummary& summary) {
    nlohmann::json per_letter = nlohmann::json::object();
    for (const auto& [letter, counts] : summary.per_letter) {
        per_letter[std::string(1, letter)] = {{"even", counts.even}, {"odd", counts.odd}};
    }
    return nlohmann::json{
        {"rng", summary.rng_algorithm},
        {"seed", summary.seed},
        {"size", summary.size},
        {"convention", convention_name(summary.convention)},
        {"even_count", summary.even_count},
        {"odd_count", summary.odd_count},
        {"per_letter", per_letter},
    };
}

nlohmann::json estimate_to_json(const MonteCarloEstimate& estimate) {
    nlohmann::json doc = summary_to_json(estimate.summary);
    doc["p_hat"] = estimate.p_hat;
    doc["ci95"] = {estimate.ci_low, estimate.ci_high};
    return doc;
}

nlohmann::json report_to_json(const FairnessReport& report) {
    return nlohmann::json{
        {"p_even", report.p},
        {"method", fairness_method_name(report.method)},
        {"epsilon", report.epsilon},
        {"verdict", report.verdict == FairnessVerdict::fair ? "fair" : "biased"},
        {"corollary_flag", report.corollary_flag},
    };
}

namespace {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

} // namespace

std::string weekday_load_csv(const std::array<double, 7>& load) {
    std::string csv = "weekday,eligible_fraction\n";
    for (std::size_t i = 0; i < 7; ++i) {
        csv += weekday_name(kWeek[i]);
        csv += ',';
        csv += format_number(load[i]);
        csv += '\n';
    }
    return csv;
}

std::string letter_counts_csv(const PopulationSummary& summary) {
    std::string csv = "letter,even_count,odd_count\n";
    for (const auto& [letter, counts] : summary.per_letter) {
        csv += letter;
        csv += ',';
        csv += std::to_string(counts.even);
        csv += ',';
        csv += std::to_string(counts.odd);
        csv += '\n';
    }
    return csv;
}

} // namespace idparity
