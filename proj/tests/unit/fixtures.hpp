// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "trishell/complex.hpp"
#include "trishell/isomorphism.hpp"

namespace trishell::testing {

inline SimplicialComplex cx(std::vector<Simplex> facets) {
  return SimplicialComplex::from_facets(facets);
}

inline SimplicialComplex single_tetrahedron() { return cx({{"a", "b", "c", "d"}}); }

inline SimplicialComplex tetrahedron_boundary() {
  return cx({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

inline SimplicialComplex octahedron_boundary() {
  // antipodal pairs (0,1), (2,3), (4,5)
  std::vector<Simplex> facets;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        facets.push_back({std::to_string(i), std::to_string(2 + j), std::to_string(4 + k)});
      }
    }
  }
  return cx(facets);
}

inline VertexMap random_relabeling(const SimplicialComplex& c, unsigned seed) {
  auto labels = c.vertex_labels();
  auto shuffled = labels;
  std::mt19937 rng(seed);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  VertexMap phi;
  for (std::size_t i = 0; i < labels.size(); ++i) phi[labels[i]] = shuffled[i];
  return phi;
}

}  // namespace trishell::testing
