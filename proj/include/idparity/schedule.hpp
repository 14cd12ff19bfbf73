#pragma once

#include <array>
#include <vector>

#include "idparity/id_number.hpp"

namespace idparity {

enum class Weekday { monday, tuesday, wednesday, thursday, friday, saturday, sunday };

inline constexpr std::array<Weekday, 7> kWeek = {
    Weekday::monday,  Weekday::tuesday, Weekday::wednesday, Weekday::thursday,
    Weekday::friday, Weekday::saturday, Weekday::sunday,
};

const char* weekday_name(Weekday day) noexcept; // "Mon".."Sun"

// One line of the rationing calendar: which last-digit parities may buy on
// this weekday. Sunday admits both; Mon/Wed/Fri odd only; Tue/Thu/Sat even
// only.
struct ScheduleDay {
    Weekday weekday;
    bool even_eligible;
    bool odd_eligible;
};

std::array<ScheduleDay, 7> weekly_schedule();

// The days this holder may buy: even last digit -> {Tue, Thu, Sat, Sun},
// odd -> {Mon, Wed, Fri, Sun}. Validity of the checksum is irrelevant
// here; the policy reads only the printed last digit.
std::vector<Weekday> purchase_days(const IdNumber& id);

// Fraction of the population eligible on each weekday when P{even last
// digit} = p, indexed Mon..Sun: Mon/Wed/Fri get 1-p, Tue/Thu/Sat get p,
// Sunday everyone.
std::array<double, 7> weekday_load(double p);

} // namespace idparity
