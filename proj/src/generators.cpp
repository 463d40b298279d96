// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/generators.hpp"

#include <string>
#include <vector>

namespace trishell {

const char* to_string(StandardKind kind) {
  switch (kind) {
    case StandardKind::simplex_boundary_4: return "simplex_boundary_4";
    case StandardKind::cycle_join: return "cycle_join";
    case StandardKind::cross_polytope_3: return "cross_polytope_3";
  }
  return "?";
}

SimplicialComplex generate_standard(StandardKind kind, int p, int q) {
  std::vector<Simplex> facets;
  switch (kind) {
    case StandardKind::simplex_boundary_4: {
      // All five 4-subsets of {0..4}.
      for (int skip = 0; skip < 5; ++skip) {
        Simplex f;
        for (int v = 0; v < 5; ++v) {
          if (v != skip) f.push_back(std::to_string(v));
        }
        facets.push_back(f);
      }
      break;
    }
    case StandardKind::cycle_join: {
      if (p < 3 || q < 3) {
        throw Error(ErrorCode::BadParameter, "cycle_join needs p, q >= 3");
      }
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
          facets.push_back({std::to_string(i), std::to_string((i + 1) % p),
                            std::to_string(p + j), std::to_string(p + (j + 1) % q)});
        }
      }
      break;
    }
    case StandardKind::cross_polytope_3: {
      // Vertices 2k, 2k+1 are antipodal; facets pick one from each pair.
      for (int mask = 0; mask < 16; ++mask) {
        Simplex f;
        for (int pair = 0; pair < 4; ++pair) {
          f.push_back(std::to_string(2 * pair + ((mask >> pair) & 1)));
        }
        facets.push_back(f);
      }
      break;
    }
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace trishell
