#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "idparity/schedule.hpp"

using namespace idparity;

namespace {

std::vector<std::string> day_names(const std::vector<Weekday>& days) {
    std::vector<std::string> names;
    for (Weekday day : days) {
        names.emplace_back(weekday_name(day));
    }
    return names;
}

IdNumber with_last_digit(int digit) {
    IdNumber id{letter_to_alpha('O'), {}};
    id.digits[8] = digit;
    return id;
}

} // namespace

TEST_CASE("weekly schedule invariants") {
    const auto schedule = weekly_schedule();
    for (const ScheduleDay& entry : schedule) {
        switch (entry.weekday) {
        case Weekday::sunday:
            CHECK(entry.even_eligible);
            CHECK(entry.odd_eligible);
            break;
        case Weekday::tuesday:
        case Weekday::thursday:
        case Weekday::saturday:
            CHECK(entry.even_eligible);
            CHECK_FALSE(entry.odd_eligible);
            break;
        default:
            CHECK_FALSE(entry.even_eligible);
            CHECK(entry.odd_eligible);
            break;
        }
    }
}

TEST_CASE("purchase days by last digit") {
    CHECK(day_names(purchase_days(with_last_digit(4))) ==
          std::vector<std::string>{"Tue", "Thu", "Sat", "Sun"});
    CHECK(day_names(purchase_days(with_last_digit(7))) ==
          std::vector<std::string>{"Mon", "Wed", "Fri", "Sun"});
}

TEST_CASE("Sunday is always available") {
    for (int digit = 0; digit < 10; ++digit) {
        const auto days = purchase_days(with_last_digit(digit));
        CHECK(std::count(days.begin(), days.end(), Weekday::sunday) == 1);
        CHECK(days.size() == 4);
    }
}

TEST_CASE("weekday load splits the population by parity") {
    SUBCASE("balanced") {
        const auto load = weekday_load(0.5);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(load[i] == 0.5);
        }
        CHECK(load[6] == 1.0);
    }
    SUBCASE("the 0.9 hypothetical") {
        const auto load = weekday_load(0.9);
        CHECK(load[0] == doctest::Approx(0.1).epsilon(1e-15)); // Mon
        CHECK(load[1] == doctest::Approx(0.9).epsilon(1e-15)); // Tue
        CHECK(load[6] == 1.0);                                 // Sun
    }
    SUBCASE("all odd") {
        const auto load = weekday_load(0.0);
        CHECK(load[0] == 1.0); // Mon
        CHECK(load[1] == 0.0); // Tue
        CHECK(load[6] == 1.0);
    }
}

TEST_CASE("weekday load invariants") {
    for (double p : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9999, 1.0}) {
        const auto load = weekday_load(p);
        for (double v : load) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(load[6] == 1.0);
        CHECK(load[0] + load[1] == doctest::Approx(1.0).epsilon(1e-15)); // Mon + Tue
    }
    CHECK_THROWS_AS(weekday_load(1.5), std::invalid_argument);
    CHECK_THROWS_AS(weekday_load(-0.1), std::invalid_argument);
}

TEST_CASE("weekday names") {
    CHECK(std::string(weekday_name(Weekday::monday)) == "Mon");
    CHECK(std::string(weekday_name(Weekday::sunday)) == "Sun");
}
