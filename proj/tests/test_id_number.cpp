#include <doctest.h>

#include <random>

#include "idparity/id_number.hpp"
#include "oracles.hpp"

using namespace idparity;

TEST_CASE("parse_id accepts a letter plus nine digits") {
    const IdNumber id = parse_id("A123456781");
    CHECK(id.code.letter == 'A');
    CHECK(id.code.alpha == 10);
    CHECK(id.digits == std::array<int, 9>{1, 2, 3, 4, 5, 6, 7, 8, 1});
}

TEST_CASE("parse_id does not enforce checksum validity") {
    CHECK_NOTHROW(parse_id("A000000000"));
    CHECK_NOTHROW(parse_id("Z999999999"));
}

TEST_CASE("parse_id length errors") {
    for (const char* text : {"A12345678", "A1234567890", "", "A"}) {
        try {
            parse_id(text);
            FAIL("expected BAD_LENGTH for '" << text << "'");
        } catch (const ParseError& e) {
            CHECK(e.kind() == ParseError::Kind::bad_length);
        }
    }
}

TEST_CASE("parse_id reports the position of a non-digit") {
    try {
        parse_id("A12E456789");
        FAIL("expected NON_DIGIT_CHARACTER");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::non_digit_character);
        CHECK(e.position() == 3);
    }
}

TEST_CASE("parse_id rejects a non-letter head") {
    CHECK_THROWS_AS(parse_id("0123456789"), ParseError);
    CHECK_THROWS_AS(parse_id("a123456781"), ParseError);
    CHECK(parse_id("a123456781", {.fold_case = true}).code.letter == 'A');
}

TEST_CASE("strict first digit mode") {
    CHECK_NOTHROW(parse_id("A023456789"));
    CHECK_NOTHROW(parse_id("A123456789", {.strict_first_digit = true}));
    CHECK_NOTHROW(parse_id("A223456789", {.strict_first_digit = true}));
    try {
        parse_id("A023456789", {.strict_first_digit = true});
        FAIL("expected FIRST_DIGIT_RANGE");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::first_digit_range);
        CHECK(e.position() == 1);
    }
}

TEST_CASE("format_id round trips") {
    CHECK(format_id(IdNumber{letter_to_alpha('A'), {1, 2, 3, 4, 5, 6, 7, 8, 1}}) ==
          "A123456781");
    CHECK(format_id(IdNumber{letter_to_alpha('O'), {0, 0, 0, 0, 0, 0, 0, 0, 8}}) ==
          "O000000008");
}

TEST_CASE("parse/format identity on random IdNumbers") {
    std::mt19937_64 gen(11);
    for (int n = 0; n < 1000; ++n) {
        IdNumber id{letter_to_alpha(static_cast<char>('A' + oracles::int_below(gen, 26))), {}};
        for (auto& d : id.digits) {
            d = oracles::int_below(gen, 10);
        }
        CHECK(parse_id(format_id(id)) == id);
    }
}

TEST_CASE("parity_vector") {
    const IdNumber id = parse_id("A123456781");
    CHECK(parity_vector(id).bits == std::array<int, 9>{1, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(parity_vector(parse_id("B000000000")).bits == std::array<int, 9>{});
    CHECK(parity_vector(parse_id("C999999999")).bits ==
          std::array<int, 9>{1, 1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("parse_id_prefix") {
    const IdPrefix prefix = parse_id_prefix("A12345678");
    CHECK(prefix.code.letter == 'A');
    CHECK(prefix.digits == std::array<int, 8>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK_THROWS_AS(parse_id_prefix("A123456789"), ParseError);
}
