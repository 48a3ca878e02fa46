#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stormcast/csv.hpp"
#include "stormcast/error.hpp"
#include "stormcast/series.hpp"

namespace stormcast::events {

/// One record of a NOAA StormEvents `details` export. The narrative is
/// retained verbatim and never analyzed.
struct StormEvent {
    std::string event_id;
    TimeStamp begin_date; // day resolution
    std::string event_type;
    std::optional<double> magnitude;       // knots for wind events
    std::optional<double> damage_property; // USD
    int injuries_direct = 0;
    std::string state;
    std::string narrative;
};

struct StationSet {
    std::vector<std::string> ids;

    void validate() const {
        if (ids.empty()) throw InvariantViolation("station set is empty");
        for (const auto& id : ids) {
            if (id.empty()) throw InvariantViolation("empty station id");
            for (const char c : id) {
                if (!std::isupper(static_cast<unsigned char>(c)) &&
                    !std::isdigit(static_cast<unsigned char>(c))) {
                    throw InvariantViolation("station id must be uppercase alphanumeric: " + id);
                }
            }
        }
    }
};

/// Decodes the StormEvents damage convention: a number with an optional
/// K/M/B magnitude suffix. Empty or undecodable strings map to missing.
inline std::optional<double> parse_damage_amount(std::string_view s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    if (begin == end) return std::nullopt;

    double scale = 1.0;
    const char last = s[end - 1];
    if (last == 'K' || last == 'k') scale = 1e3;
    else if (last == 'M' || last == 'm') scale = 1e6;
    else if (last == 'B' || last == 'b') scale = 1e9;
    if (scale != 1.0) --end;
    if (begin == end) return std::nullopt; // bare suffix carries no amount

    const auto value = csv::parse_double(s.substr(begin, end - begin));
    if (!value || *value < 0.0) return std::nullopt;
    return *value * scale;
}

/// Parses a StormEvents `details` CSV export. Column order is free; the
/// required header fields must be present. Records with unparseable
/// magnitude keep the event with magnitude missing.
inline std::vector<StormEvent> parse_storm_events_csv(std::istream& in) {
    std::vector<std::string> fields;
    std::size_t line = 1;
    if (!csv::read_record(in, fields, line)) throw FormatError("empty StormEvents CSV", 1);

    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < fields.size(); ++i) col[fields[i]] = i;
    static const char* required[] = {"EVENT_ID", "BEGIN_YEARMONTH", "BEGIN_DAY",
                                     "EVENT_TYPE", "MAGNITUDE", "DAMAGE_PROPERTY",
                                     "INJURIES_DIRECT", "STATE"};
    for (const char* name : required) {
        if (!col.count(name)) {
            throw FormatError(std::string("StormEvents CSV lacks required column ") + name, 1);
        }
    }
    const bool has_narrative = col.count("EVENT_NARRATIVE") > 0;

    std::vector<StormEvent> out;
    while (true) {
        const std::size_t record_line = line;
        if (!csv::read_record(in, fields, line)) break;
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (fields.size() < col.size()) {
            throw FormatError("StormEvents record has too few fields", record_line);
        }
        const auto get = [&](const char* name) -> const std::string& {
            return fields[col.at(name)];
        };

        StormEvent ev;
        ev.event_id = get("EVENT_ID");
        ev.event_type = get("EVENT_TYPE");
        ev.state = get("STATE");
        if (has_narrative) ev.narrative = fields[col.at("EVENT_NARRATIVE")];

        const auto yearmonth = csv::parse_double(get("BEGIN_YEARMONTH"));
        const auto day = csv::parse_double(get("BEGIN_DAY"));
        if (!yearmonth || !day) {
            throw FormatError("StormEvents record has no begin date", record_line);
        }
        const int ym = static_cast<int>(*yearmonth);
        try {
            ev.begin_date = TimeStamp::from_civil(ym / 100, static_cast<unsigned>(ym % 100),
                                                  static_cast<unsigned>(*day));
        } catch (const InvariantViolation&) {
            throw FormatError("StormEvents record has invalid begin date", record_line);
        }

        const auto magnitude = csv::parse_double(get("MAGNITUDE"));
        if (magnitude && *magnitude >= 0.0) ev.magnitude = magnitude;
        ev.damage_property = parse_damage_amount(get("DAMAGE_PROPERTY"));
        const auto injuries = csv::parse_double(get("INJURIES_DIRECT"));
        ev.injuries_direct = injuries && *injuries > 0 ? static_cast<int>(*injuries) : 0;

        out.push_back(std::move(ev));
    }
    return out;
}

inline std::vector<StormEvent> parse_storm_events_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_storm_events_csv(in);
}

/// Event subset of interest: both sets must match (empty set = match all).
struct EventFilter {
    std::set<std::string> event_types;
    std::set<std::string> states;

    bool matches(const StormEvent& ev) const {
        if (!event_types.empty() && !event_types.count(ev.event_type)) return false;
        if (!states.empty() && !states.count(ev.state)) return false;
        return true;
    }
};

enum class FillMode { zero, missing };

/// Daily storm-magnitude series over the span of the filtered events. The
/// value on a day is the maximum magnitude among that day's events — severity
/// tracking targets the worst event. Days without events fill per `fill`.
inline Series build_event_series(const std::vector<StormEvent>& events, const EventFilter& filter,
                                 FillMode fill, std::string name = "MAG") {
    std::map<std::int64_t, double> day_max;
    bool any = false;
    for (const auto& ev : events) {
        if (!filter.matches(ev)) continue;
        any = true;
        if (!ev.magnitude) continue;
        const std::int64_t d = ev.begin_date.day_number();
        const auto it = day_max.find(d);
        if (it == day_max.end()) day_max[d] = *ev.magnitude;
        else it->second = std::max(it->second, *ev.magnitude);
    }
    if (!any) throw EmptyEventSet();
    if (day_max.empty()) throw EmptyEventSet(); // matched events all lack magnitude

    Series out(std::move(name));
    const std::int64_t first = day_max.begin()->first;
    const std::int64_t last = day_max.rbegin()->first;
    for (std::int64_t d = first; d <= last; ++d) {
        const auto it = day_max.find(d);
        std::optional<double> v;
        if (it != day_max.end()) v = it->second;
        else if (fill == FillMode::zero) v = 0.0;
        out.push_back(TimeStamp::from_minutes(d * 1440), v);
    }
    return out;
}

} // namespace stormcast::events
