#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "stormcast/ndbc.hpp"
#include "stormcast/series.hpp"

namespace stormcast::ndbc {

/// Builds the merged daily panel: one day-mean column per (station, variable)
/// named `<station>_<var>`, plus the daily event-magnitude series as the
/// final column. The index is the union of all days. Stations iterate in
/// sorted order so the merge is deterministic.
inline Panel merge_panel(const std::map<std::string, std::vector<BuoyObservation>>& by_station,
                         const Series& event_series, int min_count = 1) {
    if (by_station.empty()) throw InvariantViolation("merge_panel requires at least one station");

    std::vector<Series> columns;
    for (const auto& [station, observations] : by_station) {
        // chronological order with exact-duplicate timestamps dropped keep-first
        std::vector<const BuoyObservation*> sorted;
        sorted.reserve(observations.size());
        for (const auto& obs : observations) sorted.push_back(&obs);
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const BuoyObservation* a, const BuoyObservation* b) {
                             return a->time < b->time;
                         });

        for (std::size_t v = 0; v < kVariableCount; ++v) {
            Series raw(station + "_" + kVariableNames[v]);
            for (const auto* obs : sorted) {
                if (!raw.empty() && !(raw.times().back() < obs->time)) continue;
                raw.push_back(obs->time, obs->*variable_field(v));
            }
            // an empty station contributes an all-missing column over the
            // union index rather than an aggregation error
            columns.push_back(raw.empty() ? std::move(raw) : aggregate_daily(raw, min_count));
        }
    }
    columns.push_back(event_series);
    return align(columns);
}

} // namespace stormcast::ndbc
