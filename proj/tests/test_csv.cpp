#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "stormcast/csv.hpp"

using namespace stormcast;

TEST_CASE("csv record reader handles quoting, embedded commas and newlines") {
    std::istringstream in("a,\"b,c\",\"line1\nline2\",\"he said \"\"hi\"\"\"\r\nx,,z\n");
    std::vector<std::string> fields;
    std::size_t line = 1;

    REQUIRE(csv::read_record(in, fields, line));
    REQUIRE(fields.size() == 4);
    CHECK(fields[0] == "a");
    CHECK(fields[1] == "b,c");
    CHECK(fields[2] == "line1\nline2");
    CHECK(fields[3] == "he said \"hi\"");

    REQUIRE(csv::read_record(in, fields, line));
    REQUIRE(fields.size() == 3);
    CHECK(fields[1].empty());
    CHECK(fields[2] == "z");

    CHECK_FALSE(csv::read_record(in, fields, line));
}

TEST_CASE("csv escape round trips through the reader") {
    const std::string tricky = "a \"quoted\" value, with comma\nand newline";
    std::istringstream in(csv::escape(tricky) + "," + csv::escape("plain") + "\n");
    std::vector<std::string> fields;
    std::size_t line = 1;
    REQUIRE(csv::read_record(in, fields, line));
    REQUIRE(fields.size() == 2);
    CHECK(fields[0] == tricky);
    CHECK(fields[1] == "plain");
}

TEST_CASE("panel csv round trip preserves values and missing cells") {
    std::vector<TimeStamp> index{TimeStamp::from_civil(2010, 1, 1),
                                 TimeStamp::from_civil(2010, 1, 2),
                                 TimeStamp::from_civil(2010, 1, 3, 12, 30)};
    Panel p(index);
    p.add_column("42001_wvht", {1.25, std::nullopt, 3.5});
    p.add_column("MAG", {0.0, 52.0, std::nullopt});

    std::ostringstream out;
    csv::write_panel(out, p);
    const std::string text = out.str();
    CHECK(text.starts_with("timestamp,42001_wvht,MAG\n"));
    CHECK(text.find("2010-01-02T00:00,,52") != std::string::npos);

    std::istringstream in(text);
    const Panel q = csv::read_panel(in);
    REQUIRE(q.rows() == 3);
    REQUIRE(q.cols() == 2);
    CHECK(q.index() == p.index());
    for (std::size_t c = 0; c < p.cols(); ++c) {
        CHECK(q.names()[c] == p.names()[c]);
        CHECK(q.column(c) == p.column(c));
    }
}

TEST_CASE("panel csv rejects malformed input") {
    {
        std::istringstream in("time,x\n2010-01-01T00:00,1\n");
        CHECK_THROWS_AS(csv::read_panel(in), FormatError);
    }
    {
        std::istringstream in("timestamp,x\nnot-a-time,1\n");
        CHECK_THROWS_AS(csv::read_panel(in), FormatError);
    }
    {
        std::istringstream in("timestamp,x\n2010-01-01T00:00,abc\n");
        CHECK_THROWS_AS(csv::read_panel(in), FormatError);
    }
    {
        std::istringstream in("timestamp,x\n2010-01-01T00:00,1,2\n");
        CHECK_THROWS_AS(csv::read_panel(in), FormatError);
    }
}
