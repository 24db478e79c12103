#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ctdesign/constructions.hpp"
#include "ctdesign/io.hpp"
#include "ctdesign/report.hpp"

using namespace ctd;

TEST_CASE("design file round trip") {
    for (const Design& d : {biplane11(), pg_lines(3).lines, example3(4, 2)}) {
        std::ostringstream os;
        write_design(os, d);
        std::istringstream is(os.str());
        const Design back = read_design(is);
        CHECK(back.v == d.v);
        CHECK(back.k == d.k);
        CHECK(back.blocks == d.blocks);
    }
}

TEST_CASE("design file parsing errors") {
    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return read_design(is);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("x y z\n"), ParseError);
    CHECK_THROWS_AS(parse("5 2 2\n0 1\n"), ParseError);          // missing block
    CHECK_THROWS_AS(parse("5 2 1\n0 1 2\n"), ParseError);        // wrong cardinality
    CHECK_THROWS_AS(parse("5 2 1\n0 7\n"), ParseError);          // point out of range
    CHECK_THROWS_AS(parse("5 2 2\n0 1\n0 1\n"), ParseError);     // duplicate block
    CHECK_NOTHROW(parse("# comment\n5 2 1\n\n0 1\n"));
}

TEST_CASE("group file round trip and metadata") {
    const PermGroup w = wreath_group(3, 2);
    std::ostringstream os;
    write_group(os, w);
    std::istringstream is(os.str());
    const auto back = read_group(is);
    CHECK(back.group.degree() == 6);
    CHECK(back.group.order() == 72);

    SECTION("declared order is asserted") {
        std::istringstream bad("# order: 71\ndegree 6\n(0 1)\n(0 1 2)(3 4 5)\n");
        CHECK_THROWS_AS(read_group(bad), ParseError);
        std::istringstream good("# order: 6\ndegree 3\n(0 1)\n(0 1 2)\n");
        CHECK(read_group(good).group.order() == 6);
    }
    SECTION("checksum is verified when present") {
        std::istringstream bad("# checksum: fnv1a64:0000000000000000\ndegree 3\n(0 1)\n");
        CHECK_THROWS_AS(read_group(bad), ParseError);
    }
    SECTION("tampered bundled file is rejected") {
        std::ifstream in(default_data_dir() + "/groups/psl2_11.grp");
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        const auto pos = text.find("(0 1 2 3 4 5 6 7 8 9 10)");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 25, "(0 2 1 3 4 5 6 7 8 9 10)");
        std::istringstream is2(text);
        CHECK_THROWS_AS(read_group(is2), ParseError);
    }
    SECTION("parse failures") {
        std::istringstream nohdr("(0 1)\n");
        CHECK_THROWS_AS(read_group(nohdr), ParseError);
        std::istringstream nogen("degree 5\n");
        CHECK_THROWS_AS(read_group(nogen), ParseError);
        std::istringstream badgen("degree 3\n(0 5)\n");
        CHECK_THROWS_AS(read_group(badgen), ParseError);
    }
}

TEST_CASE("bundled data loads") {
    CHECK(load_golay_basis().size() == 12);
    CHECK(bundled_design("witt12_base").blocks.size() == 1);
    CHECK(bundled_group("m11").degree() == 11);
}

TEST_CASE("reports are deterministic") {
    const auto fano = pg_lines(2);
    const auto rep1 = analyze(fano.lines, &fano.pgl);
    const auto rep2 = analyze(fano.lines, &fano.pgl);
    CHECK(to_json(rep1, fano.lines).dump(2) == to_json(rep2, fano.lines).dump(2));
    CHECK(report_text(rep1) == report_text(rep2));

    const auto c1 = orbit_census(bundled_group("psl2_11"), 5);
    const auto c2 = orbit_census(bundled_group("psl2_11"), 5);
    CHECK(to_json(c1).dump() == to_json(c2).dump());

    CHECK(screen_csv(screen_all()) == screen_csv(screen_all()));
}

TEST_CASE("analysis report json shape") {
    const auto fano = pg_lines(2);
    const auto j = to_json(analyze(fano.lines, &fano.pgl), fano.lines);
    CHECK(j["v"] == 7);
    CHECK(j["k"] == 3);
    CHECK(j["blocks"].size() == 7);
    CHECK(j["delta"] == 2);
    CHECK(j["r"] == 1);
    CHECK(j["strength"] == 2);
    CHECK(j["completely_regular"]["verdict"] == true);
    CHECK(j["group"]["order"] == "168");
    CHECK(j["group"]["completely_transitive"] == true);

    const Design single(6, 3, {KSubset::of_points({0, 1, 2})});
    const auto js = to_json(analyze(single), single);
    CHECK(js["delta"] == "infinity");
    CHECK_FALSE(js.contains("group"));

    // a non-equitable design exposes the witness
    const auto jb = to_json(analyze(biplane11()), biplane11());
    CHECK(jb["completely_regular"]["verdict"] == false);
    CHECK(jb["completely_regular"].contains("witness"));
}

TEST_CASE("orbit census distance matrix") {
    const auto c = orbit_census(bundled_group("psl2_11"), 5);
    REQUIRE(c.sizes.size() == 4);
    REQUIRE(c.min_distance.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(c.min_distance[i][i] == 0);
    // symmetric
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(c.min_distance[i][j] == c.min_distance[j][i]);
}
