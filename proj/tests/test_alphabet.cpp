#include <doctest.h>

#include <numeric>

#include "idparity/alphabet.hpp"
#include "oracles.hpp"

using namespace idparity;

TEST_CASE("letter table matches the reference copy entry by entry") {
    const auto& reference = oracles::reference_letter_codes();
    REQUIRE(reference.size() == 26);
    for (const auto& [letter, alpha] : reference) {
        CHECK(letter_to_alpha(letter).alpha == alpha);
    }
}

TEST_CASE("letter table sums to 585") {
    int sum = 0;
    for (const AlphaCode& code : all_alpha_codes()) {
        sum += code.alpha;
    }
    CHECK(sum == 585);
}

TEST_CASE("spot values from the table") {
    CHECK(letter_to_alpha('A').alpha == 10);
    CHECK(letter_to_alpha('O').alpha == 35);
    CHECK(letter_to_alpha('I').alpha == 34);
    CHECK(letter_to_alpha('W').alpha == 32);
    CHECK(letter_to_alpha('Z').alpha == 33);
}

TEST_CASE("derived fields satisfy their invariants for every letter") {
    for (const AlphaCode& code : all_alpha_codes()) {
        CHECK(code.alpha_prime == code.alpha % 10);
        CHECK(code.tens_term >= 1);
        CHECK(code.tens_term <= 3);
        CHECK((code.alpha - 11 * code.alpha_prime) % 10 == 0);
        CHECK((code.parity_constant == 0 || code.parity_constant == 1));
        // The two algebraic forms of the letter constant agree mod 2.
        const int first_form =
            oracles::positive_mod(code.tens_term + 9 * code.alpha_prime, 2);
        const int second_form =
            oracles::positive_mod((code.alpha - 11 * code.alpha_prime) / 10, 2);
        CHECK(first_form == second_form);
        CHECK(code.parity_constant == second_form);
    }
}

TEST_CASE("lowercase input is rejected unless case folding is on") {
    CHECK_THROWS_AS(letter_to_alpha('b'), ParseError);
    CHECK(letter_to_alpha('b', /*fold_case=*/true).alpha == 11);
    CHECK(letter_to_alpha('o', /*fold_case=*/true).letter == 'O');
}

TEST_CASE("non-letters are rejected with NOT_A_CAPITAL_LETTER") {
    for (char c : {'0', '@', '[', ' ', '\n'}) {
        try {
            letter_to_alpha(c);
            FAIL("expected ParseError for " << c);
        } catch (const ParseError& e) {
            CHECK(e.kind() == ParseError::Kind::not_a_capital_letter);
            CHECK(std::string(e.code_word()) == "NOT_A_CAPITAL_LETTER");
        }
    }
}
