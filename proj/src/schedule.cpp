#include "idparity/schedule.hpp"

#include <stdexcept>
#include <string>

namespace idparity {

const char* weekday_name(Weekday day) noexcept {
    switch (day) {
    case Weekday::monday: return "Mon";
    case Weekday::tuesday: return "Tue";
    case Weekday::wednesday: return "Wed";
    case Weekday::thursday: return "Thu";
    case Weekday::friday: return "Fri";
    case Weekday::saturday: return "Sat";
    case Weekday::sunday: return "Sun";
    }
    return "???";
}

std::array<ScheduleDay, 7> weekly_schedule() {
    std::array<ScheduleDay, 7> schedule{};
    for (std::size_t i = 0; i < 7; ++i) {
        const Weekday day = kWeek[i];
        const bool sunday = day == Weekday::sunday;
        const bool even_day = day == Weekday::tuesday || day == Weekday::thursday ||
                              day == Weekday::saturday;
        schedule[i] = ScheduleDay{day, sunday || even_day, sunday || !even_day};
    }
    return schedule;
}

std::vector<Weekday> purchase_days(const IdNumber& id) {
    const bool even = id.digits[8] % 2 == 0;
    std::vector<Weekday> days;
    days.reserve(4);
    for (const ScheduleDay& entry : weekly_schedule()) {
        if ((even && entry.even_eligible) || (!even && entry.odd_eligible)) {
            days.push_back(entry.weekday);
        }
    }
    return days;
}

std::array<double, 7> weekday_load(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("weekday_load: p = " + std::to_string(p) +
                                    " is outside [0,1]");
    }
    std::array<double, 7> load{};
    for (std::size_t i = 0; i < 7; ++i) {
        const auto& entry = weekly_schedule()[i];
        load[i] = (entry.even_eligible ? p : 0.0) + (entry.odd_eligible ? 1.0 - p : 0.0);
    }
    return load;
}

} // namespace idparity
