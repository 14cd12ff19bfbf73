#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idparity {

// Base for all domain errors. code_word() is the stable machine-readable
// token that the CLI prints on the diagnostic stream; messages may change,
// code words may not.
class Error : public std::runtime_error {
public:
    Error(std::string code_word, const std::string& message)
        : std::runtime_error(message), code_word_(std::move(code_word)) {}

    const std::string& code_word() const noexcept { return code_word_; }

private:
    std::string code_word_;
};

// Rejected ID text. position is the 0-based offset of the offending
// character (0 for whole-string problems such as a bad length).
class ParseError : public Error {
public:
    enum class Kind {
        bad_length,
        not_a_capital_letter,
        non_digit_character,
        first_digit_range,
    };

    ParseError(Kind kind, std::size_t position, const std::string& message)
        : Error(code_word_for(kind), message), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

    static const char* code_word_for(Kind kind) noexcept {
        switch (kind) {
        case Kind::bad_length: return "BAD_LENGTH";
        case Kind::not_a_capital_letter: return "NOT_A_CAPITAL_LETTER";
        case Kind::non_digit_character: return "NON_DIGIT_CHARACTER";
        case Kind::first_digit_range: return "FIRST_DIGIT_RANGE";
        }
        return "PARSE_ERROR";
    }

private:
    Kind kind_;
    std::size_t position_;
};

class BiasOutOfRange : public Error {
public:
    explicit BiasOutOfRange(const std::string& message)
        : Error("BIAS_OUT_OF_RANGE", message) {}
};

class InvalidPmf : public Error {
public:
    explicit InvalidPmf(const std::string& message)
        : Error("INVALID_PMF", message) {}
};

class InvalidWeights : public Error {
public:
    explicit InvalidWeights(const std::string& message)
        : Error("INVALID_WEIGHTS", message) {}
};

// Malformed configuration files, unusable field values, etc.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message)
        : Error("BAD_CONFIG", message) {}
};

} // namespace idparity
