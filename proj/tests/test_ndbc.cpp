#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "stormcast/merge.hpp"
#include "stormcast/ndbc.hpp"

using namespace stormcast;
using ndbc::BuoyObservation;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const std::string kFixtureDir = STORMCAST_FIXTURE_DIR;

} // namespace

TEST_CASE("modern 18-column row decodes values and sentinels") {
    const std::string text =
        "#YY  MM DD hh mm WDIR WSPD GST  WVHT   DPD   APD MWD   PRES  ATMP  WTMP  DEWP  VIS  TIDE\n"
        "#yr  mo dy hr mn degT m/s  m/s  m      sec   sec degT  hPa   degC  degC  degC  nmi  ft\n"
        "2010 01 01 00 00 180 5.0 7.0 1.5 8.0 6.0 175 1013.2 22.0 24.0 18.0 99.0 99.00\n";
    const auto obs = ndbc::parse_ndbc_file(text, "42001");
    REQUIRE(obs.size() == 1);
    CHECK(obs[0].station_id == "42001");
    CHECK(obs[0].time == TimeStamp::from_civil(2010, 1, 1, 0, 0));
    CHECK(obs[0].wdir == 180.0);
    CHECK(obs[0].wspd == 5.0);
    CHECK(obs[0].gst == 7.0);
    CHECK(obs[0].wvht == 1.5);
    CHECK(obs[0].pres == 1013.2);
    CHECK(obs[0].atmp == 22.0);
    CHECK_FALSE(obs[0].vis.has_value());
    CHECK_FALSE(obs[0].tide.has_value());
}

TEST_CASE("MM token decodes to missing") {
    const std::string text =
        "YYYY MM DD hh WD WSPD GST WVHT DPD APD MWD BAR ATMP WTMP DEWP VIS\n"
        "2003 06 15 00 210 7.5 9.2 1.8 6.25 5.31 205 1015.2 MM 28.1 23.5 99.0\n";
    const auto obs = ndbc::parse_ndbc_file(text, "42001");
    REQUIRE(obs.size() == 1);
    CHECK_FALSE(obs[0].atmp.has_value());
    CHECK(obs[0].wtmp == 28.1);
}

TEST_CASE("two-digit years pivot at 70") {
    const std::string text =
        "YY MM DD hh WD WSPD GST WVHT DPD APD MWD BAR ATMP WTMP DEWP VIS\n"
        "98 12 31 23 270 10.0 12.5 2.1 8.33 5.77 148 1019.5 21.5 24.1 17.0 99.0\n"
        "69 01 01 00 270 10.0 12.5 2.1 8.33 5.77 148 1019.5 21.5 24.1 17.0 99.0\n";
    // rows land out of order chronologically; the parser does not reorder
    std::istringstream in(text);
    const auto obs = ndbc::parse_ndbc_file(in, "41006");
    REQUIRE(obs.size() == 2);
    CHECK(obs[0].time == TimeStamp::from_civil(1998, 12, 31, 23, 0));
    CHECK(obs[1].time == TimeStamp::from_civil(2069, 1, 1, 0, 0));
}

TEST_CASE("header-only file yields an empty list") {
    const std::string text =
        "#YY  MM DD hh mm WDIR WSPD GST  WVHT   DPD   APD MWD   PRES  ATMP  WTMP  DEWP  VIS  TIDE\n"
        "#yr  mo dy hr mn degT m/s  m/s  m      sec   sec degT  hPa   degC  degC  degC  nmi  ft\n";
    CHECK(ndbc::parse_ndbc_file(text, "42001").empty());
}

TEST_CASE("format errors carry line information") {
    const std::string bad_header = "FOO BAR BAZ\n";
    CHECK_THROWS_AS(ndbc::parse_ndbc_file(bad_header, "X1"), FormatError);

    const std::string bad_field =
        "YY MM DD hh WD WSPD GST WVHT DPD APD MWD BAR ATMP WTMP DEWP VIS\n"
        "98 12 31 23 270 abc 12.5 2.1 8.33 5.77 148 1019.5 21.5 24.1 17.0 99.0\n";
    try {
        ndbc::parse_ndbc_file(bad_field, "X1");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }

    const std::string short_row =
        "YY MM DD hh WD WSPD GST WVHT DPD APD MWD BAR ATMP WTMP DEWP VIS\n"
        "98 12 31 23 270 10.0\n";
    CHECK_THROWS_AS(ndbc::parse_ndbc_file(short_row, "X1"), FormatError);
}

TEST_CASE("duplicate timestamps keep the first row and warn") {
    std::vector<std::string> warnings;
    const auto obs = ndbc::parse_ndbc_file(
        read_file(kFixtureDir + "/ndbc/42001h2010.txt"), "42001", &warnings);
    REQUIRE(obs.size() == 4);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("duplicate timestamp") != std::string::npos);
    // the kept 02:00 row is the first (MM-heavy) one
    CHECK_FALSE(obs[2].wspd.has_value());
    CHECK(obs[2].wvht == 1.7);
}

TEST_CASE("no sentinel magnitude survives in parsed output") {
    for (const std::string name : {"41006h1998.txt", "42001h2003.txt", "42001h2010.txt"}) {
        const auto obs = ndbc::parse_ndbc_file(read_file(kFixtureDir + "/ndbc/" + name), "S1");
        for (const auto& o : obs) {
            for (std::size_t v = 0; v < ndbc::kVariableCount; ++v) {
                const auto& field = o.*ndbc::variable_field(v);
                if (!field) continue;
                CHECK(*field != 99.0);
                CHECK(*field != 999.0);
                CHECK(*field != 9999.0);
            }
        }
    }
}

TEST_CASE("canonical round trip is the identity on all fields") {
    for (const std::string name : {"41006h1998.txt", "42001h2003.txt", "42001h2010.txt"}) {
        const auto first = ndbc::parse_ndbc_file(read_file(kFixtureDir + "/ndbc/" + name), "S1");
        const auto again = ndbc::parse_ndbc_file(ndbc::write_ndbc_canonical(first), "S1");
        REQUIRE(first.size() == again.size());
        for (std::size_t i = 0; i < first.size(); ++i) {
            CHECK(first[i].time == again[i].time);
            for (std::size_t v = 0; v < ndbc::kVariableCount; ++v) {
                CHECK(first[i].*ndbc::variable_field(v) == again[i].*ndbc::variable_field(v));
            }
        }
    }
}

TEST_CASE("canonical output matches the frozen goldens") {
    for (const std::string name : {"41006h1998", "42001h2003", "42001h2010"}) {
        const auto obs =
            ndbc::parse_ndbc_file(read_file(kFixtureDir + "/ndbc/" + name + ".txt"), "S1");
        const auto golden = read_file(kFixtureDir + "/ndbc/golden/" + name + ".canonical.txt");
        CHECK(ndbc::write_ndbc_canonical(obs) == golden);
    }
}

TEST_CASE("merge_panel builds station_variable columns plus MAG") {
    const auto obs = ndbc::parse_ndbc_file(read_file(kFixtureDir + "/ndbc/42001h2010.txt"), "42001");
    std::map<std::string, std::vector<BuoyObservation>> by_station;
    by_station["42001"] = obs;

    Series mag("MAG");
    mag.push_back(TimeStamp::from_civil(2010, 1, 1), 0.0);
    mag.push_back(TimeStamp::from_civil(2010, 1, 2), 52.0); // extends index past buoy span

    const auto panel = ndbc::merge_panel(by_station, mag);
    CHECK(panel.cols() == ndbc::kVariableCount + 1);
    CHECK(panel.rows() == 2);
    CHECK(panel.names().back() == "MAG");
    CHECK(panel.has_column("42001_wvht"));
    CHECK(panel.cell(1, panel.column_index("MAG")) == 52.0);
    CHECK_FALSE(panel.cell(1, panel.column_index("42001_wvht")).has_value());
    // day mean of the four kept rows: wvht {1.5,1.6,1.7,1.8}
    CHECK(*panel.cell(0, panel.column_index("42001_wvht")) == Catch::Approx(1.65));
}

TEST_CASE("merge_panel keeps all-missing columns for stations without data") {
    std::map<std::string, std::vector<BuoyObservation>> by_station;
    by_station["42001"] = {};
    Series mag("MAG");
    mag.push_back(TimeStamp::from_civil(2010, 1, 1), 5.0);
    const auto panel = ndbc::merge_panel(by_station, mag);
    CHECK(panel.cols() == ndbc::kVariableCount + 1);
    CHECK(panel.rows() == 1);
    CHECK_FALSE(panel.cell(0, panel.column_index("42001_wvht")).has_value());
    CHECK(panel.cell(0, panel.column_index("MAG")) == 5.0);
}
