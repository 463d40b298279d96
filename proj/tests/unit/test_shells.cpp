// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "trishell/generators.hpp"
#include "trishell/intersection.hpp"
#include "trishell/isomorphism.hpp"
#include "trishell/shells.hpp"

#include "fixtures.hpp"

using namespace trishell;
using namespace trishell::testing;

TEST_CASE("detect_shell") {
  auto cw5 = wheel_shell(ShellKind::cyclic, 3, 5);
  auto witness = detect_shell(cw5);
  REQUIRE(witness.has_value());
  CHECK(witness->kind == ShellKind::cyclic);
  CHECK(witness->dim == 3);
  CHECK(witness->catalog_id == "3CW_5");

  auto ls5 = detect_shell(*catalog_lookup("LS_5"));
  REQUIRE(ls5.has_value());
  CHECK(ls5->kind == ShellKind::lineal);
  CHECK(ls5->catalog_id == "LS_5");

  CHECK_FALSE(detect_shell(generate_standard(StandardKind::simplex_boundary_4)).has_value());

  auto lw2 = detect_shell(cx({{"a", "b", "c", "d"}, {"b", "c", "d", "e"}}));
  REQUIRE(lw2.has_value());
  CHECK(lw2->kind == ShellKind::lineal);
  CHECK(lw2->catalog_id == "3LW_2");

  CHECK_THROWS_AS(detect_shell(cx({{"a", "b", "c"}, {"b", "c", "d", "e"}})), Error);

  SUBCASE("witness order realizes the pattern") {
    for (const char* name : {"LS_5", "LF_7", "CS_6", "CF_8", "3CE_6"}) {
      auto c = *catalog_lookup(name);
      auto w = detect_shell(c);
      REQUIRE(w.has_value());
      auto m = intersection_matrix(c, w->order).entries;
      const std::size_t k = m.size();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          bool adjacent = j == i + 1 || (w->kind == ShellKind::cyclic && i == 0 && j == k - 1);
          CHECK(m[i][j] == (adjacent ? 3 : 2));
        }
      }
    }
  }
}

TEST_CASE("three pairwise-adjacent tetrahedra") {
  // Exhaustive oracle for the cyclic seed: fix H0 = {0,1,2,3} and
  // H1 = {1,2,3,4}; every completion with |H2∩H0| = |H2∩H1| = 3 either has
  // three distinct pairwise intersections (then it is the 3-wheel) or a
  // common triangle (then it is not).
  auto h0 = Simplex{"0", "1", "2", "3"};
  auto h1 = Simplex{"1", "2", "3", "4"};
  auto cw3 = wheel_shell(ShellKind::cyclic, 3, 3);
  int wheels = 0, fans = 0;
  std::vector<Label> pool = {"0", "1", "2", "3", "4", "5"};
  std::vector<bool> take(pool.size(), false);
  std::fill(take.begin(), take.begin() + 4, true);
  std::sort(take.begin(), take.end());
  do {
    Simplex h2;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (take[i]) h2.push_back(pool[i]);
    }
    std::sort(h2.begin(), h2.end());
    if (h2 == h0 || h2 == h1) continue;
    if (simplex_intersection_size(h2, h0) != 3 || simplex_intersection_size(h2, h1) != 3) continue;
    auto candidate = cx({h0, h1, h2});
    bool distinct = std::set<Simplex>{simplex_intersection(h0, h1), simplex_intersection(h0, h2),
                                      simplex_intersection(h1, h2)}
                        .size() == 3;
    if (distinct) {
      ++wheels;
      CHECK(are_isomorphic(candidate, cw3).has_value());
    } else {
      ++fans;
      CHECK_FALSE(are_isomorphic(candidate, cw3).has_value());
    }
  } while (std::next_permutation(take.begin(), take.end()));
  CHECK(wheels > 0);
  CHECK(fans > 0);  // the common-triangle fan exists and is excluded from the catalog
}

TEST_CASE("lift_2_shell") {
  auto lifted_cw5 = lift_2_shell(wheel_shell(ShellKind::cyclic, 2, 5), "apex");
  auto witness = detect_shell(lifted_cw5);
  REQUIRE(witness.has_value());
  CHECK(witness->kind == ShellKind::cyclic);
  CHECK(witness->dim == 3);
  CHECK(witness->k() == 5);

  CHECK(are_isomorphic(lift_2_shell(*catalog_lookup("CE_5"), "u"), *catalog_lookup("3CE_5"))
            .has_value());
  CHECK(are_isomorphic(lift_2_shell(*catalog_lookup("LE_4"), "u"), *catalog_lookup("3LE_4"))
            .has_value());

  CHECK_THROWS_AS(lift_2_shell(tetrahedron_boundary(), "u"), Error);
  CHECK_THROWS_AS(lift_2_shell(*catalog_lookup("CE_5"), "v"), Error);  // label clash

  SUBCASE("a 3-shell is lifted iff some vertex lies in every facet") {
    for (const auto& entry : shell_catalog()) {
      auto w = detect_shell(entry.complex);
      REQUIRE(w.has_value());
      if (w->dim != 3) continue;
      Simplex common = entry.complex.facet(0);
      for (const auto& f : entry.complex.facets()) common = simplex_intersection(common, f);
      bool lifted = false;
      for (const Label& apex : common) {
        auto shadow = shell_shadow(entry.complex, apex);
        auto back = lift_2_shell(shadow, "fresh_apex");
        if (are_isomorphic(back, entry.complex).has_value()) lifted = true;
      }
      CHECK(lifted == !common.empty());
    }
  }
}

TEST_CASE("catalog fixtures match their own detection") {
  for (const auto& entry : shell_catalog()) {
    auto witness = detect_shell(entry.complex);
    REQUIRE(witness.has_value());
    CHECK(witness->catalog_id == entry.name);
  }
  CHECK(catalog_lookup("3CW_9").has_value());
  CHECK(catalog_lookup("2LW_5").has_value());
  CHECK_FALSE(catalog_lookup("XYZ_3").has_value());
  CHECK_FALSE(catalog_lookup("3CW_2").has_value());
}

TEST_CASE("the two presentations of LF_7 agree") {
  auto [alt, onto_alt] = lf7_alternative_presentation();
  auto lf7 = *catalog_lookup("LF_7");
  CHECK(is_isomorphism(lf7, alt, onto_alt));
  CHECK(are_isomorphic(lf7, alt).has_value());
}

TEST_CASE("enumeration invariants") {
  auto lineal = enumerate_lineal_shells(3, 7);
  for (const auto& [k, classes] : lineal.classes_by_k) {
    for (const auto& rep : classes) {
      auto witness = detect_shell(rep);
      REQUIRE(witness.has_value());
      CHECK(witness->kind == ShellKind::lineal);
      CHECK(witness->k() == k);
      // dropping the last facet leaves a lineal shell with k-1 facets
      if (k > 2) {
        auto order = witness->order;
        order.pop_back();
        auto smaller = detect_shell(SimplicialComplex::from_facets(order));
        REQUIRE(smaller.has_value());
        CHECK(smaller->kind == ShellKind::lineal);
        CHECK(smaller->k() == k - 1);
      }
    }
  }

  auto cyclic = enumerate_cyclic_shells(3, 7);
  for (const auto& [k, classes] : cyclic.classes_by_k) {
    for (const auto& rep : classes) {
      auto witness = detect_shell(rep);
      REQUIRE(witness.has_value());
      CHECK(witness->kind == ShellKind::cyclic);
      CHECK(witness->k() == k);
    }
  }

  SUBCASE("parameter checks") {
    CHECK_THROWS_AS(enumerate_lineal_shells(4, 6), Error);
    CHECK_THROWS_AS(enumerate_lineal_shells(3, 1), Error);
    CHECK_THROWS_AS(enumerate_lineal_shells(3, kMaxEnumerationFacets + 1), Error);
    CHECK_THROWS_AS(enumerate_cyclic_shells(2, 2), Error);
  }
}

namespace {

// Independent completeness oracle: grow every complex of equal-rank facets
// whose pairwise intersections stay at rank n or n-1, adding one facet
// anywhere (not just at the ends of an order), with up to two fresh
// vertices per step. Any shell with k facets must appear at level k.
std::vector<std::map<std::string, SimplicialComplex>> grow_pre_shells(int n, int k_max) {
  const int rank = n + 1;
  std::vector<std::map<std::string, SimplicialComplex>> levels(
      static_cast<std::size_t>(k_max) + 1);
  {
    Simplex seed;
    for (int v = 0; v < rank; ++v) seed.push_back(std::to_string(v));
    auto c = cx({seed});
    levels[1].emplace(canonical_form(c).key(), canonical_form(c).to_complex());
  }
  for (int k = 2; k <= k_max; ++k) {
    for (const auto& [key, rep] : levels[static_cast<std::size_t>(k - 1)]) {
      std::vector<Label> pool = rep.vertex_labels();
      pool.push_back(std::to_string(rep.vertex_count()));
      pool.push_back(std::to_string(rep.vertex_count() + 1));
      std::vector<bool> take(pool.size(), false);
      std::fill(take.end() - rank, take.end(), true);
      std::sort(take.begin(), take.end());
      do {
        Simplex candidate;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (take[i]) candidate.push_back(pool[i]);
        }
        std::sort(candidate.begin(), candidate.end());
        bool ok = true;
        for (const Simplex& f : rep.facets()) {
          auto shared = simplex_intersection_size(candidate, f);
          if (shared != static_cast<std::size_t>(n) &&
              shared != static_cast<std::size_t>(n - 1)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        auto facets = rep.facets();
        facets.push_back(candidate);
        auto form = canonical_form(cx(facets));
        levels[static_cast<std::size_t>(k)].emplace(form.key(), form.to_complex());
      } while (std::next_permutation(take.begin(), take.end()));
    }
  }
  return levels;
}

}  // namespace

TEST_CASE("raw gluing search finds the same shell classes") {
  auto levels = grow_pre_shells(3, 6);
  std::map<int, std::set<std::string>> lineal_keys, cyclic_keys;
  int fan_like = 0;
  for (int k = 2; k <= 6; ++k) {
    for (const auto& [key, rep] : levels[static_cast<std::size_t>(k)]) {
      auto witness = detect_shell(rep);
      if (!witness) continue;
      if (witness->kind == ShellKind::lineal) lineal_keys[k].insert(key);
      if (witness->kind != ShellKind::cyclic) continue;
      if (k == 3 && !cyclic_wheel_core(rep.facets())) {
        ++fan_like;  // common-triangle fan: matches the raw rank pattern only
        continue;
      }
      cyclic_keys[k].insert(key);
    }
  }

  auto lineal = enumerate_lineal_shells(3, 6);
  for (const auto& [k, classes] : lineal.classes_by_k) {
    std::set<std::string> expected;
    for (const auto& rep : classes) expected.insert(canonical_form(rep).key());
    CHECK(lineal_keys[k] == expected);
  }
  auto cyclic = enumerate_cyclic_shells(3, 6);
  for (const auto& [k, classes] : cyclic.classes_by_k) {
    std::set<std::string> expected;
    for (const auto& rep : classes) expected.insert(canonical_form(rep).key());
    CHECK(cyclic_keys[k] == expected);
  }
  CHECK(fan_like == 1);
}

TEST_CASE("verify_classification") {
  auto report = verify_classification(3, 9);
  CHECK(report.ok);
  CHECK(report.unnamed_keys.empty());
  CHECK(report.missing_catalog.empty());

  std::set<std::string> lineal_names;
  for (const auto& entry : report.lineal) {
    REQUIRE(entry.name.has_value());
    if (entry.name->find("LW_") == std::string::npos) lineal_names.insert(*entry.name);
  }
  CHECK(lineal_names ==
        std::set<std::string>{"3LE_4", "3LE_5", "3LE_6", "LS_5", "LF_6", "LF_7", "LF_8"});

  std::set<std::string> cyclic_names;
  for (const auto& entry : report.cyclic) {
    REQUIRE(entry.name.has_value());
    if (entry.name->find("CW_") == std::string::npos) cyclic_names.insert(*entry.name);
  }
  CHECK(cyclic_names == std::set<std::string>{"3CE_5", "3CE_6", "CS_6", "CF_8"});
}
