#pragma once

#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "stormcast/error.hpp"
#include "stormcast/timestamp.hpp"

namespace stormcast::ndbc {

/// One row of an NDBC standard-meteorological file, sentinel-decoded.
struct BuoyObservation {
    std::string station_id;
    TimeStamp time;
    std::optional<double> wdir; // degrees
    std::optional<double> wspd; // m/s
    std::optional<double> gst;  // m/s
    std::optional<double> wvht; // meters
    std::optional<double> dpd;  // seconds
    std::optional<double> apd;  // seconds
    std::optional<double> mwd;  // degrees
    std::optional<double> pres; // hPa
    std::optional<double> atmp; // degC
    std::optional<double> wtmp; // degC
    std::optional<double> dewp; // degC
    std::optional<double> vis;  // nautical miles
    std::optional<double> tide; // feet
};

inline constexpr std::size_t kVariableCount = 13;

/// Physical-variable columns in canonical file order.
inline constexpr std::array<const char*, kVariableCount> kVariableNames = {
    "wdir", "wspd", "gst", "wvht", "dpd", "apd", "mwd",
    "pres", "atmp", "wtmp", "dewp", "vis", "tide"};

inline std::optional<double> BuoyObservation::* variable_field(std::size_t v) {
    static constexpr std::array<std::optional<double> BuoyObservation::*, kVariableCount> fields = {
        &BuoyObservation::wdir, &BuoyObservation::wspd, &BuoyObservation::gst,
        &BuoyObservation::wvht, &BuoyObservation::dpd,  &BuoyObservation::apd,
        &BuoyObservation::mwd,  &BuoyObservation::pres, &BuoyObservation::atmp,
        &BuoyObservation::wtmp, &BuoyObservation::dewp, &BuoyObservation::vis,
        &BuoyObservation::tide};
    return fields[v];
}

namespace detail {

// Sentinel magnitude per variable, following the NDBC convention for each
// column's width: 999 for directions and temperatures, 9999 for pressure,
// 99 for the narrow columns. The token MM always means missing.
inline double sentinel_for(std::size_t variable) {
    switch (variable) {
        case 0: case 6: return 999.0;                   // wdir, mwd
        case 7: return 9999.0;                          // pres
        case 8: case 9: case 10: return 999.0;          // atmp, wtmp, dewp
        default: return 99.0;                           // wspd gst wvht dpd apd vis tide
    }
}

struct HeaderLayout {
    // Column index of each date part; -1 when absent (minutes pre-2005).
    int year = -1, month = -1, day = -1, hour = -1, minute = -1;
    bool two_digit_year = false;
    // variable slot (index into kVariableNames) per column; -1 for date parts
    std::vector<int> column_variable;
};

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int variable_slot(std::string_view token) {
    if (token == "WD" || token == "WDIR") return 0;
    if (token == "WSPD") return 1;
    if (token == "GST") return 2;
    if (token == "WVHT") return 3;
    if (token == "DPD") return 4;
    if (token == "APD") return 5;
    if (token == "MWD") return 6;
    if (token == "BAR" || token == "PRES") return 7;
    if (token == "ATMP") return 8;
    if (token == "WTMP") return 9;
    if (token == "DEWP") return 10;
    if (token == "VIS") return 11;
    if (token == "TIDE") return 12;
    return -1;
}

inline HeaderLayout parse_header(std::string_view line, std::size_t line_no) {
    HeaderLayout layout;
    auto tokens = split_ws(line);
    if (!tokens.empty() && tokens[0].starts_with('#')) tokens[0].remove_prefix(1);
    if (tokens.empty()) throw FormatError("empty NDBC header", line_no);

    layout.column_variable.assign(tokens.size(), -1);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto tok = tokens[i];
        if (tok == "YY" || tok == "YYYY") {
            layout.year = static_cast<int>(i);
            layout.two_digit_year = (tok == "YY");
        } else if (tok == "MM" && layout.month < 0 && i <= 2) {
            layout.month = static_cast<int>(i);
        } else if (tok == "DD") {
            layout.day = static_cast<int>(i);
        } else if (tok == "hh") {
            layout.hour = static_cast<int>(i);
        } else if (tok == "mm") {
            layout.minute = static_cast<int>(i);
        } else {
            const int slot = variable_slot(tok);
            if (slot < 0) {
                throw FormatError("unrecognized NDBC header token '" + std::string(tok) + "'",
                                  line_no);
            }
            layout.column_variable[i] = slot;
        }
    }
    if (layout.year < 0 || layout.month < 0 || layout.day < 0 || layout.hour < 0) {
        throw FormatError("NDBC header lacks a full date layout", line_no);
    }
    return layout;
}

inline double parse_number(std::string_view token, std::size_t line_no, std::size_t column) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw FormatError("non-numeric NDBC field '" + std::string(token) + "'", line_no, column);
    }
    return value;
}

inline int parse_int(std::string_view token, std::size_t line_no, std::size_t column) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw FormatError("non-integer NDBC date field '" + std::string(token) + "'", line_no,
                          column);
    }
    return value;
}

} // namespace detail

/// Parses an NDBC standard-meteorological text file in any historical layout:
/// 2-digit years, 4-digit years, with or without a minutes column, with or
/// without the units line. Sentinel magnitudes and MM decode to missing.
/// Rows repeating an earlier timestamp are kept-first and reported through
/// `warnings` when given.
inline std::vector<BuoyObservation> parse_ndbc_file(std::istream& in,
                                                    const std::string& station_id,
                                                    std::vector<std::string>* warnings = nullptr) {
    std::string line;
    std::size_t line_no = 0;

    // header line (first non-empty line)
    detail::HeaderLayout layout;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::split_ws(line).empty()) continue;
        layout = detail::parse_header(line, line_no);
        have_header = true;
        break;
    }
    if (!have_header) throw FormatError("NDBC file has no header", 1);

    std::vector<BuoyObservation> out;
    std::unordered_set<std::int64_t> seen; // minute keys of earlier rows
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = detail::split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0].starts_with('#')) continue; // units line
        if (tokens.size() != layout.column_variable.size()) {
            throw FormatError("NDBC row has " + std::to_string(tokens.size()) +
                                  " fields, header has " +
                                  std::to_string(layout.column_variable.size()),
                              line_no);
        }

        int year = detail::parse_int(tokens[static_cast<std::size_t>(layout.year)], line_no,
                                     static_cast<std::size_t>(layout.year) + 1);
        if (layout.two_digit_year || year < 100) {
            year += (year >= 70) ? 1900 : 2000; // archive spans 1985..present
        }
        const int month = detail::parse_int(tokens[static_cast<std::size_t>(layout.month)],
                                            line_no, static_cast<std::size_t>(layout.month) + 1);
        const int day = detail::parse_int(tokens[static_cast<std::size_t>(layout.day)], line_no,
                                          static_cast<std::size_t>(layout.day) + 1);
        const int hour = detail::parse_int(tokens[static_cast<std::size_t>(layout.hour)], line_no,
                                           static_cast<std::size_t>(layout.hour) + 1);
        const int minute =
            layout.minute < 0
                ? 0
                : detail::parse_int(tokens[static_cast<std::size_t>(layout.minute)], line_no,
                                    static_cast<std::size_t>(layout.minute) + 1);

        BuoyObservation obs;
        obs.station_id = station_id;
        try {
            obs.time = TimeStamp::from_civil(year, static_cast<unsigned>(month),
                                             static_cast<unsigned>(day), hour, minute);
        } catch (const InvariantViolation&) {
            throw FormatError("invalid NDBC date", line_no);
        }

        for (std::size_t i = 0; i < tokens.size(); ++i) {
            const int slot = layout.column_variable[i];
            if (slot < 0) continue;
            if (tokens[i] == "MM") continue; // missing
            const double value = detail::parse_number(tokens[i], line_no, i + 1);
            if (value == detail::sentinel_for(static_cast<std::size_t>(slot))) continue;
            obs.*variable_field(static_cast<std::size_t>(slot)) = value;
        }

        if (!seen.insert(obs.time.minutes_since_epoch()).second) {
            if (warnings) {
                warnings->push_back(station_id + ": duplicate timestamp " + obs.time.to_iso() +
                                    " at line " + std::to_string(line_no) + ", keeping first");
            }
            continue;
        }
        out.push_back(std::move(obs));
    }
    return out;
}

inline std::vector<BuoyObservation> parse_ndbc_file(const std::string& text,
                                                    const std::string& station_id,
                                                    std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return parse_ndbc_file(in, station_id, warnings);
}

/// Writes observations in the modern layout (#-prefixed header plus units
/// line, minutes column, MM for missing). Values print with enough digits to
/// re-parse to the same double.
inline void write_ndbc_canonical(std::ostream& out,
                                 const std::vector<BuoyObservation>& observations) {
    out << "#YY  MM DD hh mm WDIR WSPD GST  WVHT   DPD   APD MWD   PRES  ATMP  WTMP  DEWP  VIS  TIDE\n";
    out << "#yr  mo dy hr mn degT m/s  m/s  m      sec   sec degT  hPa   degC  degC  degC  nmi  ft\n";
    for (const auto& obs : observations) {
        char date[32];
        std::snprintf(date, sizeof(date), "%04d %02u %02u %02d %02d", obs.time.year(),
                      obs.time.month(), obs.time.day(), obs.time.hour(), obs.time.minute());
        out << date;
        for (std::size_t v = 0; v < kVariableCount; ++v) {
            const auto& field = obs.*variable_field(v);
            if (field) {
                char buf[40];
                std::snprintf(buf, sizeof(buf), " %.10g", *field);
                out << buf;
            } else {
                out << " MM";
            }
        }
        out << '\n';
    }
}

inline std::string write_ndbc_canonical(const std::vector<BuoyObservation>& observations) {
    std::ostringstream out;
    write_ndbc_canonical(out, observations);
    return out.str();
}

} // namespace stormcast::ndbc
