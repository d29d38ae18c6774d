#include <doctest.h>

#include <charconv>
#include <sstream>

#include "entbench/io.hpp"
#include "entbench/states.hpp"
#include "test_helpers.hpp"

using namespace entb;

TEST_CASE("format_double: shortest round-trip representation") {
    GaussianStream rng(71);
    for (int trial = 0; trial < 1000; ++trial) {
        const double v = (rng.uniform() - 0.5) * std::pow(10.0, (trial % 17) - 8);
        const std::string s = format_double(v);
        double back = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc{});
        CHECK(back == v);
        CHECK(s.find(',') == std::string::npos);
    }
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("state records: round-trip is bit-exact") {
    const EnsembleSpec spec{4, 72, Field::Complex, EnsembleMeasure::HilbertSchmidt, 2, 3};
    for (std::size_t k = 0; k < spec.count; ++k) {
        const DensityMatrix rho = sample_state(spec, k);
        const std::string line = state_record_line(static_cast<std::int64_t>(k), rho);
        const StateRecord rec = parse_state_record(line);
        CHECK(rec.id == static_cast<std::int64_t>(k));
        CHECK(rec.state.dim_a() == 2);
        CHECK(rec.state.dim_b() == 3);
        CHECK(rec.state.mat() == rho.mat());
    }
}

TEST_CASE("state records: malformed lines are rejected with context") {
    CHECK_THROWS_AS(parse_state_record("not json"), Error);
    CHECK_THROWS_AS(parse_state_record("{\"id\":0}"), Error);
    CHECK_THROWS_AS(
        parse_state_record("{\"id\":0,\"dim_a\":2,\"dim_b\":2,\"entries\":[[1,0]]}"), Error);

    // a parseable matrix that is not a density matrix
    std::string bad = "{\"id\":0,\"dim_a\":2,\"dim_b\":1,\"entries\":[[2,0],[0,0],[0,0],[0,0]]}";
    CHECK_THROWS_AS(parse_state_record(bad), Error);
}

TEST_CASE("states jsonl: reader reports the offending line") {
    std::stringstream bad;
    bad << state_record_line(0, make_state(family::Bell{1})) << "\n";
    bad << "garbage\n";
    try {
        read_states_jsonl(bad, "input.jsonl");
        FAIL("expected a parse failure");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("input.jsonl:2") != std::string::npos);
    }
}

TEST_CASE("csv: header lookup, round-trip and error paths") {
    CsvTable table;
    table.header = {"id", "value"};
    table.rows = {{"0", "0.5"}, {"1", ""}};

    std::stringstream out;
    write_csv(out, table);
    CHECK(out.str() == "id,value\n0,0.5\n1,\n");

    std::stringstream in(out.str());
    const CsvTable back = read_csv(in, "t.csv");
    CHECK(back.header == table.header);
    CHECK(back.rows == table.rows);
    CHECK(back.column("value").value() == 1);
    CHECK(!back.column("missing").has_value());

    CHECK(parse_cell("").has_value() == false);
    CHECK(parse_cell("0.5").value() == 0.5);
    CHECK_THROWS_AS(parse_cell("abc"), Error);

    std::stringstream ragged("a,b\n1\n");
    CHECK_THROWS_AS(read_csv(ragged, "r.csv"), Error);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_csv(empty, "e.csv"), Error);
}

TEST_CASE("svg: deterministic bytes and one circle per point") {
    const std::vector<double> xs = {0.0, 0.5, 1.0};
    const std::vector<double> ys = {0.1, 0.9, 0.4};
    SvgOptions opt;
    opt.title = "y vs x";
    const std::string a = scatter_svg(xs, ys, opt);
    const std::string b = scatter_svg(xs, ys, opt);
    CHECK(a == b);

    std::size_t circles = 0;
    for (std::size_t pos = a.find("<circle"); pos != std::string::npos;
         pos = a.find("<circle", pos + 1))
        ++circles;
    CHECK(circles == 3);
    CHECK(a.find("y vs x") != std::string::npos);
}

TEST_CASE("svg: empty input still draws the axes") {
    const std::string svg = scatter_svg({}, {}, SvgOptions{});
    CHECK(svg.find("<circle") == std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
