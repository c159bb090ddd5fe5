// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "chart.hpp"
#include "csv.hpp"
#include "error.hpp"

using namespace wsnet;

namespace {

const char* kTinyCsv =
    "metric,threshold,n_nodes,n_links,min_degree,max_degree,avg_degree,density,"
    "transitivity,degree_correlation,avg_distance,n_isolated,n_similarities\n"
    "jaro,0.00,3,6,4,4,4,1,1,,1,0,3\n"
    "jaro,0.50,3,3,2,2,2,0.5,1,,1.5,0,2\n"
    "jaro,1.00,3,1,0,2,0.666666666667,0.166666666667,0,,1,1,0\n";

}  // namespace

TEST_CASE("csv parser handles quoting and CRLF") {
    const auto rows = parse_csv("a,b\r\n\"x,1\",\"he said \"\"hi\"\"\"\n,\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"a", "b"});
    CHECK(rows[1] == std::vector<std::string>{"x,1", "he said \"hi\""});
    CHECK(rows[2] == std::vector<std::string>{"", ""});
    CHECK_THROWS_AS(parse_csv("\"unterminated"), Error);
    CHECK(csv_quote("plain") == "plain");
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("q\"q") == "\"q\"\"q\"");
}

TEST_CASE("chart renders one series with markers") {
    const std::string svg = render_chart(kTinyCsv, "avg_degree");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // one jaro series: red circles
    CHECK(svg.find("fill=\"red\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find(">jaro</text>") != std::string::npos);
    CHECK(svg.find("avg_degree vs threshold") != std::string::npos);
    // three data points -> three circle markers
    size_t circles = 0;
    size_t pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        ++pos;
    }
    CHECK(circles >= 3);
}

TEST_CASE("undefined cells break the line") {
    // degree_correlation is empty everywhere: no polyline should remain.
    const std::string svg = render_chart(kTinyCsv, "degree_correlation");
    CHECK(svg.find("<polyline") == std::string::npos);
}

TEST_CASE("unknown property is a usage error listing the valid ones") {
    try {
        render_chart(kTinyCsv, "betweenness");
        FAIL("expected a usage error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Usage);
        const std::string msg = e.what();
        CHECK(msg.find("betweenness") != std::string::npos);
        CHECK(msg.find("avg_degree") != std::string::npos);
        CHECK(msg.find("transitivity") != std::string::npos);
    }
    CHECK_THROWS_AS(render_chart(kTinyCsv, "metric"), Error);
    CHECK_THROWS_AS(render_chart("not,a,sweep\n1,2,3\n", "avg_degree"), Error);
}

TEST_CASE("chart output is deterministic") {
    CHECK(render_chart(kTinyCsv, "density") == render_chart(kTinyCsv, "density"));
}
