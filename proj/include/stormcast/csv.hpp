#pragma once

#include <charconv>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stormcast/error.hpp"
#include "stormcast/series.hpp"

namespace stormcast::csv {

/// Reads one CSV record starting at the current stream position. Quoted
/// fields may contain commas, escaped quotes ("") and newlines. Returns false
/// at end of input. `line` tracks the 1-based line the record started on.
inline bool read_record(std::istream& in, std::vector<std::string>& fields, std::size_t& line) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;

    std::string field;
    bool quoted = false;
    const std::size_t start_line = line;
    (void)start_line;
    while (true) {
        if (c == EOF) {
            fields.push_back(field);
            return true;
        }
        if (quoted) {
            if (c == '"') {
                const int next = in.peek();
                if (next == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                if (c != '\r' || in.peek() != '\n') field.push_back(static_cast<char>(c));
            }
        } else {
            if (c == '"' && field.empty()) {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(field);
                field.clear();
            } else if (c == '\n') {
                ++line;
                fields.push_back(field);
                return true;
            } else if (c == '\r') {
                if (in.peek() == '\n') {
                    in.get();
                    ++line;
                }
                fields.push_back(field);
                return true;
            } else {
                field.push_back(static_cast<char>(c));
            }
        }
        c = in.get();
    }
}

/// Quotes a field only when it needs it.
inline std::string escape(std::string_view field) {
    const bool needs = field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs) return std::string(field);
    std::string out = "\"";
    for (const char ch : field) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out += "\"";
    return out;
}

inline std::optional<double> parse_double(std::string_view text) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
    if (begin == end) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

/// Numeric cell format used by every emitted CSV: shortest representation
/// that round-trips a double at 10 significant digits.
inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

/// Panel CSV layout: header `timestamp,<col...>`, ISO-8601 minutes-resolution
/// timestamps, missing cells as empty fields.
inline void write_panel(std::ostream& out, const Panel& p) {
    out << "timestamp";
    for (const auto& name : p.names()) out << ',' << escape(name);
    out << '\n';
    for (std::size_t r = 0; r < p.rows(); ++r) {
        out << p.index()[r].to_iso();
        for (std::size_t c = 0; c < p.cols(); ++c) {
            out << ',';
            if (p.cell(r, c)) out << format_value(*p.cell(r, c));
        }
        out << '\n';
    }
}

inline Panel read_panel(std::istream& in) {
    std::vector<std::string> fields;
    std::size_t line = 1;
    if (!read_record(in, fields, line)) throw FormatError("empty panel CSV", 1);
    if (fields.empty() || fields[0] != "timestamp") {
        throw FormatError("panel CSV must start with a 'timestamp' header column", 1);
    }
    const std::vector<std::string> names(fields.begin() + 1, fields.end());

    std::vector<TimeStamp> index;
    std::vector<std::vector<std::optional<double>>> columns(names.size());
    while (true) {
        const std::size_t record_line = line;
        if (!read_record(in, fields, line)) break;
        if (fields.size() == 1 && fields[0].empty()) continue; // trailing blank line
        if (fields.size() != names.size() + 1) {
            throw FormatError("panel CSV row has wrong field count", record_line);
        }
        const auto ts = TimeStamp::parse_iso(fields[0]);
        if (!ts) throw FormatError("bad timestamp '" + fields[0] + "'", record_line, 1);
        index.push_back(*ts);
        for (std::size_t c = 0; c < names.size(); ++c) {
            const auto& cell = fields[c + 1];
            if (cell.empty()) {
                columns[c].push_back(std::nullopt);
            } else {
                const auto v = parse_double(cell);
                if (!v) throw FormatError("bad numeric cell '" + cell + "'", record_line, c + 2);
                columns[c].push_back(v);
            }
        }
    }

    Panel out{index};
    for (std::size_t c = 0; c < names.size(); ++c) out.add_column(names[c], std::move(columns[c]));
    return out;
}

} // namespace stormcast::csv
