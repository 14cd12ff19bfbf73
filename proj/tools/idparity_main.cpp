// idparity: Taiwanese national-ID checksum tool and odd/even rationing
// fairness analyzer. See README.md for the full command reference.
//
// Exit codes: 0 success; 1 invalid input (bad ID text, malformed config,
// bad flags); 2 checksum-invalid ID under `validate`.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idparity/idparity.hpp"
#include "idparity/spec_io.hpp"

namespace {

using namespace idparity;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitChecksumInvalid = 2;

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

enum class Format { human, json, csv };

Format parse_format(const std::string& name, bool allow_csv) {
    if (name == "human") return Format::human;
    if (name == "json") return Format::json;
    if (name == "csv" && allow_csv) return Format::csv;
    throw ConfigError("unsupported format '" + name + "'");
}

void print_json(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

double probability_in_range(const std::string& text, const char* what) {
    const double value = parse_probability(text);
    if (!(value >= 0.0 && value <= 1.0)) {
        throw BiasOutOfRange(std::string(what) + " = " + fmt(value) + " is outside [0,1]");
    }
    return value;
}

struct ValidateCmd {
    std::string id_text;
    std::string convention = "paper";
    std::string format = "human";
    bool fold_case = false;
    bool strict_first_digit = false;

    int run() const {
        const auto conv = parse_convention(convention);
        const IdNumber id = parse_id(id_text, {fold_case, strict_first_digit});
        const int expected = check_digit(id.code, id_prefix(id), conv);
        const bool ok = validate(id, conv);
        if (parse_format(format, false) == Format::json) {
            print_json({
                {"convention", convention_name(conv)},
                {"id", format_id(id)},
                {"valid", ok},
                {"check_digit", id.digits[8]},
                {"expected_check_digit", expected},
            });
        } else {
            std::cout << "convention: " << convention_name(conv) << "\n"
                      << "id: " << format_id(id) << "\n"
                      << "valid: " << (ok ? "yes" : "no") << "\n";
            if (!ok) {
                std::cout << "expected_check_digit: " << expected << "\n";
            }
        }
        return ok ? kExitOk : kExitChecksumInvalid;
    }
};

struct CompleteCmd {
    std::string prefix_text;
    std::string convention = "paper";
    std::string format = "human";
    bool fold_case = false;
    bool strict_first_digit = false;

    int run() const {
        const auto conv = parse_convention(convention);
        const IdPrefix prefix = parse_id_prefix(prefix_text, {fold_case, strict_first_digit});
        const IdNumber id = complete(prefix.code, prefix.digits, conv);
        if (parse_format(format, false) == Format::json) {
            print_json({
                {"convention", convention_name(conv)},
                {"id", format_id(id)},
                {"check_digit", id.digits[8]},
            });
        } else {
            std::cout << "convention: " << convention_name(conv) << "\n"
                      << "id: " << format_id(id) << "\n";
        }
        return kExitOk;
    }
};

struct PredictCmd {
    std::string letter;
    std::vector<int> bits; // b2 b4 b6 b8
    std::string format = "human";

    int run() const {
        if (letter.size() != 1) {
            throw ParseError(ParseError::Kind::not_a_capital_letter, 0,
                             "expected a single letter, got '" + letter + "'");
        }
        for (int b : bits) {
            if (b != 0 && b != 1) {
                throw ConfigError("parity bits must be 0 or 1, got " + std::to_string(b));
            }
        }
        const AlphaCode code = letter_to_alpha(letter[0]);
        const int bit = predict_last_parity(code, bits[0], bits[1], bits[2], bits[3]);
        if (parse_format(format, false) == Format::json) {
            print_json({
                {"letter", std::string(1, code.letter)},
                {"parity_constant", code.parity_constant},
                {"bits", bits},
                {"predicted_bit", bit},
                {"predicted_parity", bit == 0 ? "even" : "odd"},
            });
        } else {
            std::cout << "letter: " << code.letter << "\n"
                      << "parity_constant: " << code.parity_constant << "\n"
                      << "predicted_bit: " << bit << "\n"
                      << "predicted_parity: " << (bit == 0 ? "even" : "odd") << "\n";
        }
        return kExitOk;
    }
};

void print_report_human(const FairnessReport& report) {
    std::cout << "method: " << fairness_method_name(report.method) << "\n"
              << "p_even: " << fmt(report.p) << "\n"
              << "deviation: " << fmt(report.p - 0.5) << "\n"
              << "epsilon: " << fmt(report.epsilon) << "\n"
              << "verdict: " << (report.verdict == FairnessVerdict::fair ? "fair" : "biased")
              << "\n"
              << "corollary_flag: " << (report.corollary_flag ? "yes" : "no") << "\n";
}

struct AnalyzeCmd {
    std::string letter;
    std::string q_text;
    std::string epsilon_text = "0.001";
    std::string format = "human";

    int run() const {
        if (letter.size() != 1) {
            throw ParseError(ParseError::Kind::not_a_capital_letter, 0,
                             "expected a single letter, got '" + letter + "'");
        }
        const AlphaCode code = letter_to_alpha(letter[0]);
        const BiasVector bias(parse_probability_list(q_text));
        if (bias.size() != 4) {
            throw ConfigError("--q needs exactly 4 probabilities (positions 2,4,6,8), got " +
                              std::to_string(bias.size()));
        }
        const double epsilon = probability_in_range(epsilon_text, "epsilon");
        const FairnessReport report = region_fairness(code, bias, epsilon);
        if (parse_format(format, false) == Format::json) {
            nlohmann::json doc = report_to_json(report);
            doc["convention"] = convention_name(ChecksumConvention::paper);
            doc["letter"] = std::string(1, code.letter);
            doc["parity_constant"] = code.parity_constant;
            doc["q"] = std::vector<double>(bias.begin(), bias.end());
            print_json(doc);
        } else {
            std::cout << "convention: " << convention_name(ChecksumConvention::paper) << "\n"
                      << "letter: " << code.letter << "\n"
                      << "parity_constant: " << code.parity_constant << "\n";
            print_report_human(report);
        }
        return kExitOk;
    }
};

struct OracleCmd {
    std::string letter;
    std::string dists_path;
    std::string epsilon_text = "0.001";
    std::string convention = "paper";
    std::string format = "human";
    bool full = false;

    int run() const {
        if (letter.size() != 1) {
            throw ParseError(ParseError::Kind::not_a_capital_letter, 0,
                             "expected a single letter, got '" + letter + "'");
        }
        const AlphaCode code = letter_to_alpha(letter[0]);
        const auto conv = parse_convention(convention);
        const OracleDists dists = load_oracle_dists(dists_path);
        const double epsilon = probability_in_range(epsilon_text, "epsilon");

        const FairnessReport report = enumerate_fairness(code, dists.even_positions, epsilon);
        std::vector<double> q;
        for (const auto& dist : dists.even_positions) {
            q.push_back(digit_even_prob(dist));
        }
        const double closed_form_p = region_fairness(code, BiasVector(q), epsilon).p;
        const double delta = report.p - closed_form_p;

        std::optional<double> full_p;
        if (full) {
            if (!dists.all_positions) {
                throw ConfigError("--full needs a distribution file with 8 PMF rows");
            }
            full_p = exact_p_full(code, *dists.all_positions, conv);
        }

        if (parse_format(format, false) == Format::json) {
            nlohmann::json doc = report_to_json(report);
            doc["convention"] = convention_name(conv);
            doc["letter"] = std::string(1, code.letter);
            doc["q"] = q;
            doc["closed_form_p"] = closed_form_p;
            doc["delta"] = delta;
            if (full_p) {
                doc["full_sweep_p"] = *full_p;
                doc["full_sweep_delta"] = *full_p - report.p;
            }
            print_json(doc);
        } else {
            std::cout << "convention: " << convention_name(conv) << "\n"
                      << "letter: " << code.letter << "\n";
            print_report_human(report);
            std::cout << "closed_form_p: " << fmt(closed_form_p) << "\n"
                      << "delta: " << fmt(delta) << "\n";
            if (full_p) {
                std::cout << "full_sweep_p: " << fmt(*full_p) << "\n"
                          << "full_sweep_delta: " << fmt(*full_p - report.p) << "\n";
            }
        }
        return kExitOk;
    }
};

struct SimulateCmd {
    std::string spec_path;
    std::string format = "human";
    std::optional<std::uint64_t> seed_flag;

    int run() const {
        PopulationSpec spec = load_population_spec(spec_path);
        // Seed precedence: flag > IDPARITY_SEED > spec file.
        if (seed_flag) {
            spec.seed = *seed_flag;
        } else if (const char* env = std::getenv("IDPARITY_SEED")) {
            try {
                std::size_t used = 0;
                const std::string text(env);
                const unsigned long long value = std::stoull(text, &used);
                if (used != text.size()) {
                    throw std::invalid_argument(text);
                }
                spec.seed = value;
            } catch (const std::exception&) {
                throw ConfigError("IDPARITY_SEED is not a valid unsigned integer: '" +
                                  std::string(env) + "'");
            }
        }

        const MonteCarloEstimate estimate = monte_carlo_p(spec);
        const double exact = exact_p_mixture(spec);
        const auto load = weekday_load(estimate.p_hat);

        switch (parse_format(format, true)) {
        case Format::json: {
            nlohmann::json doc = estimate_to_json(estimate);
            doc["exact_p"] = exact;
            nlohmann::json loads = nlohmann::json::object();
            for (std::size_t i = 0; i < 7; ++i) {
                loads[weekday_name(kWeek[i])] = load[i];
            }
            doc["weekday_load"] = loads;
            print_json(doc);
            break;
        }
        case Format::csv:
            std::cout << weekday_load_csv(load) << "\n" << letter_counts_csv(estimate.summary);
            break;
        case Format::human: {
            const auto& s = estimate.summary;
            std::cout << "convention: " << convention_name(s.convention) << "\n"
                      << "rng: " << s.rng_algorithm << "\n"
                      << "seed: " << s.seed << "\n"
                      << "size: " << s.size << "\n"
                      << "even_count: " << s.even_count << "\n"
                      << "odd_count: " << s.odd_count << "\n"
                      << "p_hat: " << fmt(estimate.p_hat) << "\n"
                      << "ci95: [" << fmt(estimate.ci_low) << ", " << fmt(estimate.ci_high)
                      << "]\n"
                      << "exact_p: " << fmt(exact) << "\n";
            for (const auto& [letter, counts] : s.per_letter) {
                std::cout << "letter " << letter << ": even " << counts.even << ", odd "
                          << counts.odd << "\n";
            }
            std::cout << "weekday_load:\n";
            for (std::size_t i = 0; i < 7; ++i) {
                std::cout << "  " << weekday_name(kWeek[i]) << " " << fmt(load[i]) << "\n";
            }
            break;
        }
        }
        return kExitOk;
    }
};

struct ScheduleCmd {
    std::string id_text;
    std::string format = "human";
    bool fold_case = false;

    int run() const {
        const IdNumber id = parse_id(id_text, {fold_case, false});
        const auto days = purchase_days(id);
        const bool even = id.digits[8] % 2 == 0;
        if (parse_format(format, false) == Format::json) {
            std::vector<std::string> names;
            for (Weekday day : days) {
                names.emplace_back(weekday_name(day));
            }
            print_json({
                {"id", format_id(id)},
                {"last_digit", id.digits[8]},
                {"parity", even ? "even" : "odd"},
                {"days", names},
            });
        } else {
            std::cout << "id: " << format_id(id) << "\n"
                      << "last_digit: " << id.digits[8] << "\n"
                      << "parity: " << (even ? "even" : "odd") << "\n"
                      << "days:";
            for (Weekday day : days) {
                std::cout << " " << weekday_name(day);
            }
            std::cout << "\n";
        }
        return kExitOk;
    }
};

struct GallagerCmd {
    int m = 0;
    std::string q_text;
    std::string format = "human";

    int run() const {
        const double q = probability_in_range(q_text, "q");
        const double p = gallager_even_ones(m, q);
        if (parse_format(format, false) == Format::json) {
            print_json({{"m", m}, {"q", q}, {"p_even_ones", p}});
        } else {
            std::cout << "m: " << m << "\n"
                      << "q: " << fmt(q) << "\n"
                      << "p_even_ones: " << fmt(p) << "\n";
        }
        return kExitOk;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Taiwanese national-ID checksum and last-digit parity fairness toolkit"};
    app.require_subcommand(1);

    ValidateCmd validate_cmd;
    auto* validate_sub = app.add_subcommand("validate", "Check an ID's checksum digit");
    validate_sub->add_option("id", validate_cmd.id_text, "ID, 1 letter + 9 digits")->required();
    validate_sub->add_option("--convention", validate_cmd.convention, "paper|complement");
    validate_sub->add_option("--format", validate_cmd.format, "human|json");
    validate_sub->add_flag("--fold-case", validate_cmd.fold_case, "accept lowercase letters");
    validate_sub->add_flag("--strict-first-digit", validate_cmd.strict_first_digit,
                           "require the first digit to be 1 or 2");

    CompleteCmd complete_cmd;
    auto* complete_sub = app.add_subcommand("complete", "Append the check digit to a prefix");
    complete_sub->add_option("prefix", complete_cmd.prefix_text, "1 letter + 8 digits")
        ->required();
    complete_sub->add_option("--convention", complete_cmd.convention, "paper|complement");
    complete_sub->add_option("--format", complete_cmd.format, "human|json");
    complete_sub->add_flag("--fold-case", complete_cmd.fold_case, "accept lowercase letters");
    complete_sub->add_flag("--strict-first-digit", complete_cmd.strict_first_digit,
                           "require the first digit to be 1 or 2");

    PredictCmd predict_cmd;
    auto* predict_sub = app.add_subcommand(
        "predict", "Predict the last digit's parity from the letter and bits b2 b4 b6 b8");
    predict_sub->add_option("letter", predict_cmd.letter, "leading capital letter")->required();
    predict_sub->add_option("bits", predict_cmd.bits, "parities of digits 2 4 6 8")
        ->expected(4)
        ->required();
    predict_sub->add_option("--format", predict_cmd.format, "human|json");

    AnalyzeCmd analyze_cmd;
    auto* analyze_sub =
        app.add_subcommand("analyze", "Closed-form fairness report for one letter");
    analyze_sub->add_option("--letter", analyze_cmd.letter, "leading capital letter")->required();
    analyze_sub
        ->add_option("--q", analyze_cmd.q_text,
                     "even-digit probabilities q2,q4,q6,q8 (decimals or fractions)")
        ->required();
    analyze_sub->add_option("--epsilon", analyze_cmd.epsilon_text, "fairness tolerance");
    analyze_sub->add_option("--format", analyze_cmd.format, "human|json");

    OracleCmd oracle_cmd;
    auto* oracle_sub = app.add_subcommand(
        "oracle", "Fairness report by exact enumeration, with closed-form delta");
    oracle_sub->add_option("--letter", oracle_cmd.letter, "leading capital letter")->required();
    oracle_sub->add_option("--dists", oracle_cmd.dists_path, "JSON distribution file")
        ->required();
    oracle_sub->add_option("--epsilon", oracle_cmd.epsilon_text, "fairness tolerance");
    oracle_sub->add_option("--convention", oracle_cmd.convention, "paper|complement");
    oracle_sub->add_flag("--full", oracle_cmd.full,
                         "also sweep all 8 positions against the real check digit");
    oracle_sub->add_option("--format", oracle_cmd.format, "human|json");

    SimulateCmd simulate_cmd;
    std::uint64_t seed_value = 0;
    auto* simulate_sub =
        app.add_subcommand("simulate", "Monte-Carlo population sampling and weekday loads");
    simulate_sub->add_option("--spec", simulate_cmd.spec_path, "population spec JSON file")
        ->required();
    auto* seed_opt = simulate_sub->add_option("--seed", seed_value, "override the spec seed");
    simulate_sub->add_option("--format", simulate_cmd.format, "human|json|csv");

    ScheduleCmd schedule_cmd;
    auto* schedule_sub = app.add_subcommand("schedule", "Purchase weekdays for an ID");
    schedule_sub->add_option("id", schedule_cmd.id_text, "ID, 1 letter + 9 digits")->required();
    schedule_sub->add_option("--format", schedule_cmd.format, "human|json");
    schedule_sub->add_flag("--fold-case", schedule_cmd.fold_case, "accept lowercase letters");

    GallagerCmd gallager_cmd;
    auto* gallager_sub = app.add_subcommand(
        "gallager", "P{even number of ones} among m bits that are 1 with probability q");
    gallager_sub->add_option("--m", gallager_cmd.m, "number of bits")->required();
    gallager_sub->add_option("--q", gallager_cmd.q_text, "per-bit probability of a one")
        ->required();
    gallager_sub->add_option("--format", gallager_cmd.format, "human|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: BAD_ARGUMENT: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (*validate_sub) return validate_cmd.run();
        if (*complete_sub) return complete_cmd.run();
        if (*predict_sub) return predict_cmd.run();
        if (*analyze_sub) return analyze_cmd.run();
        if (*oracle_sub) return oracle_cmd.run();
        if (*simulate_sub) {
            if (seed_opt->count() > 0) {
                simulate_cmd.seed_flag = seed_value;
            }
            return simulate_cmd.run();
        }
        if (*schedule_sub) return schedule_cmd.run();
        if (*gallager_sub) return gallager_cmd.run();
    } catch (const idparity::Error& e) {
        std::cerr << "error: " << e.code_word() << ": " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: BAD_ARGUMENT: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: INTERNAL: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput; // unreachable with require_subcommand(1)
}
