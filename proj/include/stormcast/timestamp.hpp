#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "stormcast/error.hpp"

namespace stormcast {

/// Calendar date-time at UTC with minute resolution.
///
/// Stored as minutes since the Unix epoch; dates before 1970 are negative.
class TimeStamp {
public:
    constexpr TimeStamp() = default;

    static constexpr TimeStamp from_minutes(std::int64_t minutes) {
        TimeStamp t;
        t.minutes_ = minutes;
        return t;
    }

    static TimeStamp from_civil(int year, unsigned month, unsigned day,
                                int hour = 0, int minute = 0) {
        using namespace std::chrono;
        const year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                 std::chrono::day{day}};
        if (!ymd.ok() || hour < 0 || hour > 23 || minute < 0 || minute > 59) {
            throw InvariantViolation("invalid calendar date-time");
        }
        const sys_days d{ymd};
        const auto total = duration_cast<minutes>(d.time_since_epoch()) +
                           hours{hour} + std::chrono::minutes{minute};
        return from_minutes(total.count());
    }

    /// Parses "YYYY-MM-DDTHH:MM" or a bare "YYYY-MM-DD".
    static std::optional<TimeStamp> parse_iso(std::string_view text) {
        int y = 0, mo = 0, d = 0, h = 0, mi = 0;
        char sep = 0;
        const std::string s(text);
        if (s.size() == 16 &&
            std::sscanf(s.c_str(), "%4d-%2d-%2d%c%2d:%2d", &y, &mo, &d, &sep, &h, &mi) == 6 &&
            (sep == 'T' || sep == ' ')) {
            // fallthrough to construction
        } else if (s.size() == 10 && std::sscanf(s.c_str(), "%4d-%2d-%2d", &y, &mo, &d) == 3) {
            h = mi = 0;
        } else {
            return std::nullopt;
        }
        try {
            return from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d), h, mi);
        } catch (const InvariantViolation&) {
            return std::nullopt;
        }
    }

    constexpr std::int64_t minutes_since_epoch() const noexcept { return minutes_; }

    /// Days since epoch (floor), usable as a calendar-day key.
    std::int64_t day_number() const noexcept {
        using namespace std::chrono;
        const sys_time<minutes> tp{minutes{minutes_}};
        return floor<days>(tp).time_since_epoch().count();
    }

    TimeStamp start_of_day() const noexcept { return from_minutes(day_number() * 1440); }

    TimeStamp start_of_month() const {
        const auto ymd = civil();
        using namespace std::chrono;
        const sys_days d{ymd.year() / ymd.month() / std::chrono::day{1}};
        return from_minutes(duration_cast<minutes>(d.time_since_epoch()).count());
    }

    int year() const { return static_cast<int>(civil().year()); }
    unsigned month() const { return static_cast<unsigned>(civil().month()); }
    unsigned day() const { return static_cast<unsigned>(civil().day()); }

    int hour() const noexcept {
        const std::int64_t in_day = minutes_ - day_number() * 1440;
        return static_cast<int>(in_day / 60);
    }
    int minute() const noexcept {
        const std::int64_t in_day = minutes_ - day_number() * 1440;
        return static_cast<int>(in_day % 60);
    }

    TimeStamp plus_minutes(std::int64_t n) const noexcept { return from_minutes(minutes_ + n); }
    TimeStamp plus_days(std::int64_t n) const noexcept { return from_minutes(minutes_ + n * 1440); }

    std::string to_iso() const {
        const auto ymd = civil();
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d",
                      static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                      static_cast<unsigned>(ymd.day()), hour(), minute());
        return buf;
    }

    friend constexpr auto operator<=>(const TimeStamp&, const TimeStamp&) = default;

private:
    std::chrono::year_month_day civil() const {
        using namespace std::chrono;
        return year_month_day{sys_days{days{day_number()}}};
    }

    std::int64_t minutes_ = 0;
};

/// Key identifying a calendar month, ordered chronologically.
inline std::int64_t month_number(const TimeStamp& t) {
    return static_cast<std::int64_t>(t.year()) * 12 + (t.month() - 1);
}

} // namespace stormcast
