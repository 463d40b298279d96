// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "trishell/generators.hpp"
#include "trishell/intersection.hpp"
#include "trishell/isomorphism.hpp"
#include "trishell/reconstruct.hpp"
#include "trishell/shells.hpp"

#include "fixtures.hpp"

using namespace trishell;
using namespace trishell::testing;

namespace {

FacetBijection identity_map(const SimplicialComplex& c) {
  FacetBijection f;
  f.source_order = c.facets();
  f.target_order = c.facets();
  for (std::size_t i = 0; i < c.facet_count(); ++i) f.assignment.push_back(static_cast<int>(i));
  f.verified = true;
  return f;
}

}  // namespace

TEST_CASE("extended_image") {
  auto bd4 = generate_standard(StandardKind::simplex_boundary_4);
  auto f = identity_map(bd4);

  // a facet maps to its own image
  CHECK(extended_image(f, bd4.facet(0)) == std::vector<Label>(bd4.facet(0)));
  // the facets around a vertex intersect in exactly that vertex
  CHECK(extended_image(f, {"0"}) == std::vector<Label>{"0"});
  // and around an edge, in that edge
  CHECK(extended_image(f, {"0", "1"}) == std::vector<Label>{"0", "1"});

  CHECK_THROWS_AS(extended_image(f, {"0", "9"}), Error);
}

TEST_CASE("check_rank_bijections") {
  auto cj = generate_standard(StandardKind::cycle_join, 3, 3);
  auto all = check_rank_bijections(cj, cj, identity_map(cj));
  CHECK(all.rank4);
  CHECK(all.rank3);
  CHECK(all.rank2);
  CHECK(all.all());

  auto bd4 = generate_standard(StandardKind::simplex_boundary_4);
  auto other = relabel(bd4, random_relabeling(bd4, 51));
  auto phi = are_isomorphic(bd4, other);
  REQUIRE(phi.has_value());
  CHECK(check_rank_bijections(bd4, other, induced_facet_map(bd4, other, *phi)).all());

  SUBCASE("shells are rejected as invalid triangulations") {
    auto cw6 = *catalog_lookup("3CW_6");
    auto cs6 = *catalog_lookup("CS_6");
    FacetBijection pairing;
    pairing.source_order = detect_shell(cw6)->order;
    pairing.target_order = detect_shell(cs6)->order;
    for (std::size_t i = 0; i < 6; ++i) pairing.assignment.push_back(static_cast<int>(i));
    REQUIRE(is_intersection_preserving(cw6, cs6, pairing));
    CHECK_THROWS_AS(check_rank_bijections(cw6, cs6, pairing), Error);
  }
}

TEST_CASE("reconstruct_isomorphism recovers relabelings") {
  auto bd4 = generate_standard(StandardKind::simplex_boundary_4);
  auto rho = random_relabeling(bd4, 61);
  auto other = relabel(bd4, rho);
  auto f = induced_facet_map(bd4, other, rho);
  auto report = reconstruct_isomorphism(bd4, other, f);
  CHECK(report.inputs_valid);
  CHECK(report.rank_bijection_ok.all());
  CHECK(report.all_singletons);
  REQUIRE(report.phi.has_value());
  CHECK(report.phi_verified);
  CHECK(*report.phi == rho);  // the extension of an induced map is unique
  CHECK_FALSE(report.failure_stage.has_value());

  SUBCASE("uniqueness: every vertex image is the phi image") {
    for (const auto& [v, image] : report.vertex_images) {
      CHECK(image == std::vector<Label>{report.phi->at(v)});
    }
  }
}

TEST_CASE("reconstruct_isomorphism on an automorphism-induced map") {
  auto cj = generate_standard(StandardKind::cycle_join, 3, 4);
  // rotating the 3-cycle is an automorphism
  VertexMap rho;
  for (const Label& v : cj.vertex_labels()) rho[v] = v;
  rho["0"] = "1";
  rho["1"] = "2";
  rho["2"] = "0";
  REQUIRE(is_isomorphism(cj, cj, rho));
  auto report = reconstruct_isomorphism(cj, cj, induced_facet_map(cj, cj, rho));
  CHECK(report.phi_verified);
  CHECK(*report.phi == rho);
}

TEST_CASE("reconstruct_isomorphism end to end with a searched map") {
  auto cross = generate_standard(StandardKind::cross_polytope_3);
  auto other = relabel(cross, random_relabeling(cross, 62));
  auto maps = find_intersection_preserving_maps(cross, other, 1);
  REQUIRE(maps.size() == 1);
  auto report = reconstruct_isomorphism(cross, other, maps.front());
  CHECK(report.phi_verified);
  CHECK(certify(cross, other, *report.phi, maps.front()));
}

TEST_CASE("a rank-breaking map on valid inputs fails at the map stage") {
  auto cj = generate_standard(StandardKind::cycle_join, 3, 3);
  FacetBijection broken = identity_map(cj);
  std::swap(broken.assignment[0], broken.assignment[1]);
  REQUIRE_FALSE(is_intersection_preserving(cj, cj, broken));
  auto report = reconstruct_isomorphism(cj, cj, broken);
  CHECK(report.inputs_valid);
  CHECK_FALSE(report.map_intersection_preserving);
  CHECK(report.failure_stage == FailureStage::rank_bijection);
  CHECK_FALSE(report.phi.has_value());
}

TEST_CASE("every map returned by the matcher extends") {
  auto cj = generate_standard(StandardKind::cycle_join, 3, 3);
  auto other = relabel(cj, random_relabeling(cj, 64));
  auto maps = find_intersection_preserving_maps(cj, other, 100);
  CHECK(maps.size() == 72);  // |Aut| of the join of two 3-cycles
  for (const auto& f : maps) {
    auto report = reconstruct_isomorphism(cj, other, f);
    CHECK(report.phi_verified);
  }
}

TEST_CASE("reconstruct_isomorphism on degenerate inputs") {
  auto tet = single_tetrahedron();
  auto report = reconstruct_isomorphism(tet, tet, identity_map(tet));
  CHECK_FALSE(report.inputs_valid);
  CHECK(report.failure_stage == FailureStage::rank_bijection);
  CHECK_FALSE(report.phi.has_value());
  CHECK_FALSE(report.phi_verified);

  SUBCASE("shell inputs carry the validation attachment") {
    auto cs6 = *catalog_lookup("CS_6");
    auto r = reconstruct_isomorphism(cs6, cs6, identity_map(cs6));
    CHECK_FALSE(r.inputs_valid);
    CHECK_FALSE(r.validation_a.verdict);
    CHECK(r.failure_stage == FailureStage::rank_bijection);
  }
}

TEST_CASE("certify") {
  auto cj = generate_standard(StandardKind::cycle_join, 3, 3);
  auto other = relabel(cj, random_relabeling(cj, 63));
  auto maps = find_intersection_preserving_maps(cj, other, 1);
  REQUIRE(!maps.empty());
  auto report = reconstruct_isomorphism(cj, other, maps.front());
  REQUIRE(report.phi_verified);
  CHECK(certify(cj, other, *report.phi, maps.front()));

  SUBCASE("swapping two image vertices breaks the certificate") {
    VertexMap broken = *report.phi;
    std::swap(broken.begin()->second, std::next(broken.begin())->second);
    CHECK_FALSE(certify(cj, other, broken, maps.front()));
  }

  SUBCASE("composing f with a facet transposition breaks the certificate") {
    FacetBijection perturbed = maps.front();
    std::swap(perturbed.assignment[0], perturbed.assignment[1]);
    CHECK_FALSE(certify(cj, other, *report.phi, perturbed));
  }
}
