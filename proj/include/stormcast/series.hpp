#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stormcast/error.hpp"
#include "stormcast/timestamp.hpp"

namespace stormcast {

/// One named series of (timestamp, optional value) points.
///
/// Timestamps are strictly increasing; an absent value is a missing
/// observation. Missingness is always the explicit optional state, never a
/// sentinel magnitude.
class Series {
public:
    Series() = default;
    explicit Series(std::string name) : name_(std::move(name)) {}

    Series(std::string name, std::vector<TimeStamp> times,
           std::vector<std::optional<double>> values)
        : name_(std::move(name)), times_(std::move(times)), values_(std::move(values)) {
        if (times_.size() != values_.size()) {
            throw InvariantViolation("series times/values length mismatch");
        }
        for (std::size_t i = 1; i < times_.size(); ++i) {
            if (!(times_[i - 1] < times_[i])) {
                throw InvariantViolation("series timestamps not strictly increasing");
            }
        }
    }

    void push_back(TimeStamp t, std::optional<double> v) {
        if (!times_.empty() && !(times_.back() < t)) {
            throw InvariantViolation("series timestamps not strictly increasing");
        }
        times_.push_back(t);
        values_.push_back(v);
    }

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t size() const noexcept { return times_.size(); }
    bool empty() const noexcept { return times_.empty(); }

    TimeStamp time(std::size_t i) const { return times_[i]; }
    const std::optional<double>& value(std::size_t i) const { return values_[i]; }
    void set_value(std::size_t i, std::optional<double> v) { values_[i] = v; }

    const std::vector<TimeStamp>& times() const noexcept { return times_; }
    const std::vector<std::optional<double>>& values() const noexcept { return values_; }

    std::size_t present_count() const noexcept {
        std::size_t n = 0;
        for (const auto& v : values_) n += v.has_value() ? 1 : 0;
        return n;
    }

    /// Present values in order, for callers that require a complete series.
    std::vector<double> dense_values(const char* who) const {
        std::vector<double> out;
        out.reserve(values_.size());
        for (const auto& v : values_) {
            if (!v) throw MissingValues(std::string(who) + ": series contains missing values");
            out.push_back(*v);
        }
        return out;
    }

private:
    std::string name_;
    std::vector<TimeStamp> times_;
    std::vector<std::optional<double>> values_;
};

/// Aligned multi-series table: one shared strictly-increasing time index and
/// named value columns of equal length.
class Panel {
public:
    Panel() = default;

    explicit Panel(std::vector<TimeStamp> index) : index_(std::move(index)) {
        for (std::size_t i = 1; i < index_.size(); ++i) {
            if (!(index_[i - 1] < index_[i])) {
                throw InvariantViolation("panel index not strictly increasing");
            }
        }
    }

    void add_column(std::string name, std::vector<std::optional<double>> values) {
        if (values.size() != index_.size()) {
            throw InvariantViolation("column length does not match panel index");
        }
        if (has_column(name)) throw DuplicateName(name);
        names_.push_back(std::move(name));
        columns_.push_back(std::move(values));
    }

    std::size_t rows() const noexcept { return index_.size(); }
    std::size_t cols() const noexcept { return columns_.size(); }

    const std::vector<TimeStamp>& index() const noexcept { return index_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    bool has_column(const std::string& name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    std::size_t column_index(const std::string& name) const {
        const auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) throw OutOfRange("no such column: " + name);
        return static_cast<std::size_t>(it - names_.begin());
    }

    const std::vector<std::optional<double>>& column(std::size_t c) const { return columns_[c]; }
    const std::vector<std::optional<double>>& column(const std::string& name) const {
        return columns_[column_index(name)];
    }

    const std::optional<double>& cell(std::size_t row, std::size_t col) const {
        return columns_[col][row];
    }
    void set_cell(std::size_t row, std::size_t col, std::optional<double> v) {
        columns_[col][row] = v;
    }

    std::size_t missing_count() const noexcept {
        std::size_t n = 0;
        for (const auto& col : columns_)
            for (const auto& v : col) n += v.has_value() ? 0 : 1;
        return n;
    }

    Series to_series(std::size_t c) const { return Series(names_[c], index_, columns_[c]); }
    Series to_series(const std::string& name) const { return to_series(column_index(name)); }

    /// Panel restricted to the given columns, in the given order.
    Panel select(const std::vector<std::string>& names) const {
        Panel out(index_);
        for (const auto& n : names) out.add_column(n, column(n));
        return out;
    }

    Panel row_slice(std::size_t begin, std::size_t end) const {
        Panel out(std::vector<TimeStamp>(index_.begin() + static_cast<std::ptrdiff_t>(begin),
                                         index_.begin() + static_cast<std::ptrdiff_t>(end)));
        for (std::size_t c = 0; c < cols(); ++c) {
            out.add_column(names_[c],
                           std::vector<std::optional<double>>(
                               columns_[c].begin() + static_cast<std::ptrdiff_t>(begin),
                               columns_[c].begin() + static_cast<std::ptrdiff_t>(end)));
        }
        return out;
    }

private:
    std::vector<TimeStamp> index_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::optional<double>>> columns_;
};

/// Chronological split boundary; rows before it form the first part.
struct TimeSplit {
    TimeStamp boundary;
};

/// Day-mean aggregation. Produces one point per calendar day spanned by the
/// input; a day is missing unless it has at least `min_count` present values.
inline Series aggregate_daily(const Series& s, int min_count = 1) {
    if (s.empty()) throw EmptySeries();
    if (min_count < 1) throw InvariantViolation("min_count must be >= 1");

    const std::int64_t first_day = s.time(0).day_number();
    const std::int64_t last_day = s.time(s.size() - 1).day_number();

    Series out(s.name());
    std::size_t i = 0;
    for (std::int64_t d = first_day; d <= last_day; ++d) {
        double sum = 0.0;
        int count = 0;
        while (i < s.size() && s.time(i).day_number() == d) {
            if (s.value(i)) {
                sum += *s.value(i);
                ++count;
            }
            ++i;
        }
        std::optional<double> v;
        if (count >= min_count) v = sum / count;
        out.push_back(TimeStamp::from_minutes(d * 1440), v);
    }
    return out;
}

/// Month-mean aggregation of a daily series; a month is missing iff every day
/// in it is missing.
inline Series aggregate_monthly(const Series& s) {
    if (s.empty()) throw EmptySeries();

    const std::int64_t first = month_number(s.time(0));
    const std::int64_t last = month_number(s.time(s.size() - 1));

    Series out(s.name());
    std::size_t i = 0;
    for (std::int64_t m = first; m <= last; ++m) {
        double sum = 0.0;
        int count = 0;
        while (i < s.size() && month_number(s.time(i)) == m) {
            if (s.value(i)) {
                sum += *s.value(i);
                ++count;
            }
            ++i;
        }
        std::optional<double> v;
        if (count > 0) v = sum / count;
        const int year = static_cast<int>(m >= 0 ? m / 12 : (m - 11) / 12);
        const unsigned month = static_cast<unsigned>(m - static_cast<std::int64_t>(year) * 12 + 1);
        out.push_back(TimeStamp::from_civil(year, month, 1), v);
    }
    return out;
}

/// Aligns series onto the sorted union of their timestamps; cells absent in a
/// source series are missing.
inline Panel align(std::span<const Series> series) {
    if (series.empty()) throw InvariantViolation("align requires at least one series");
    {
        std::set<std::string> seen;
        for (const auto& s : series) {
            if (!seen.insert(s.name()).second) throw DuplicateName(s.name());
        }
    }

    std::vector<TimeStamp> index;
    for (const auto& s : series) {
        index.insert(index.end(), s.times().begin(), s.times().end());
    }
    std::sort(index.begin(), index.end());
    index.erase(std::unique(index.begin(), index.end()), index.end());

    Panel out(index);
    for (const auto& s : series) {
        std::vector<std::optional<double>> col(index.size());
        std::size_t j = 0;
        for (std::size_t i = 0; i < index.size(); ++i) {
            while (j < s.size() && s.time(j) < index[i]) ++j;
            if (j < s.size() && s.time(j) == index[i]) col[i] = s.value(j);
        }
        out.add_column(s.name(), std::move(col));
    }
    return out;
}

inline Panel align(const std::vector<Series>& series) {
    return align(std::span<const Series>(series));
}

/// Partitions rows at the boundary: first part holds rows strictly before it.
inline std::pair<Panel, Panel> split_at(const Panel& p, const TimeSplit& split) {
    if (p.rows() == 0) throw OutOfRange("split_at: empty panel");
    if (split.boundary < p.index().front() || p.index().back() < split.boundary) {
        throw OutOfRange("split boundary outside panel index span");
    }
    const auto it = std::lower_bound(p.index().begin(), p.index().end(), split.boundary);
    const std::size_t cut = static_cast<std::size_t>(it - p.index().begin());
    return {p.row_slice(0, cut), p.row_slice(cut, p.rows())};
}

} // namespace stormcast
