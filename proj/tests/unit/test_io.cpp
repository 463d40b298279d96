// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "trishell/generators.hpp"
#include "trishell/io.hpp"

#include "fixtures.hpp"

using namespace trishell;
using namespace trishell::testing;

TEST_CASE("facet text parsing") {
  auto parsed = parse_facet_text("# a comment\n\na b c d\nb c d e  # trailing comment\n");
  CHECK(parsed.complex.facet_count() == 2);
  CHECK(parsed.complex.vertex_count() == 5);

  SUBCASE("dominated lines are absorbed silently") {
    auto absorbed = parse_facet_text("a b\na b c\n");
    CHECK(absorbed.complex.facet_count() == 1);
  }

  SUBCASE("empty input") {
    CHECK_THROWS_AS(parse_facet_text("# only a comment\n"), Error);
  }

  SUBCASE("round trip") {
    auto cj = generate_standard(StandardKind::cycle_join, 3, 4);
    auto back = parse_facet_text(to_facet_text(cj, "cj"));
    CHECK(back.complex == cj);
  }
}

TEST_CASE("json complex form") {
  auto cj = generate_standard(StandardKind::cycle_join, 3, 3);
  auto j = complex_to_json(cj, "cj33");
  auto back = complex_from_json(j);
  CHECK(back.complex == cj);
  CHECK(back.name == "cj33");

  SUBCASE("malformed labels are rejected loudly") {
    nlohmann::json bad = {{"facets", {{"a", "b c"}}}};
    CHECK_THROWS_AS(complex_from_json(bad), Error);
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::array()), Error);
    CHECK_THROWS_AS(complex_from_json({{"facets", "zzz"}}), Error);
  }
  SUBCASE("parse_complex sniffs the format") {
    CHECK(parse_complex(j.dump()).complex == cj);
    CHECK(parse_complex(to_facet_text(cj)).complex == cj);
    CHECK_THROWS_AS(parse_complex("{ not json"), Error);
  }
  SUBCASE("unnamed JSON output round-trips") {
    auto unnamed = complex_from_json(complex_to_json(cj));
    CHECK(unnamed.complex == cj);
    CHECK_FALSE(unnamed.name.has_value());
  }
}

TEST_CASE("map files") {
  auto cj = generate_standard(StandardKind::cycle_join, 3, 3);
  auto other = relabel(cj, random_relabeling(cj, 71));
  auto maps = find_intersection_preserving_maps(cj, other, 1);
  REQUIRE(!maps.empty());
  auto j = map_to_json(maps.front(), cj, other);
  auto back = map_from_json(j, cj, other);
  CHECK(is_intersection_preserving(cj, other, back));

  SUBCASE("rejects partial or repeated pairs") {
    nlohmann::json partial = nlohmann::json::array();
    partial.push_back({0, 0});
    CHECK_THROWS_AS(map_from_json(partial, cj, other), Error);
    auto repeated = j;
    repeated[1] = repeated[0];
    CHECK_THROWS_AS(map_from_json(repeated, cj, other), Error);
  }
}

TEST_CASE("matrix export") {
  auto bd4 = generate_standard(StandardKind::simplex_boundary_4);
  auto m = intersection_matrix(bd4);
  CHECK(matrix_to_csv(m) ==
        "0,1,2,3,4\n"
        "4,3,3,3,3\n"
        "3,4,3,3,3\n"
        "3,3,4,3,3\n"
        "3,3,3,4,3\n"
        "3,3,3,3,4\n");
  auto j = matrix_to_json(m);
  CHECK(j["entries"][0][0] == 4);
  CHECK(j["facet_order"].size() == 5);
}

TEST_CASE("report serialization is stable") {
  auto report = validate_triangulation(*catalog_lookup("CS_6"));
  auto j1 = report_to_json(report).dump();
  auto j2 = report_to_json(validate_triangulation(*catalog_lookup("CS_6"))).dump();
  CHECK(j1 == j2);
  CHECK(j1.find("\"verdict\":false") != std::string::npos);
}
