// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trishell/complex.hpp"

namespace trishell {

/// Symmetric matrix of facet-intersection ranks under a fixed facet order.
/// entries[i][j] = |facet_i ∩ facet_j|, so the diagonal holds facet ranks.
struct IntersectionMatrix {
  std::vector<Simplex> facet_order;
  std::vector<std::vector<int>> entries;

  bool operator==(const IntersectionMatrix& other) const = default;
};

/// Matrix under the given order, or under the default label-lexicographic
/// facet order. Throws BadOrder when `order` is not a permutation of the
/// facet set.
IntersectionMatrix intersection_matrix(const SimplicialComplex& c,
                                       const std::optional<std::vector<Simplex>>& order = std::nullopt);

/// Candidate or verified pairing between two facet sets.
/// source_order[i] is paired with target_order[assignment[i]].
struct FacetBijection {
  std::vector<Simplex> source_order;
  std::vector<Simplex> target_order;
  std::vector<int> assignment;
  bool verified = false;

  Simplex image_of(const Simplex& source_facet) const;  // FaceNotFound if absent
  FacetBijection inverse() const;
};

/// True iff m is a complete bijective pairing of a's facets with b's.
bool is_facet_pairing(const SimplicialComplex& a, const SimplicialComplex& b,
                      const FacetBijection& m);

/// True iff |X ∩ Y| = |f(X) ∩ f(Y)| for every facet pair, including X = Y
/// (which forces equal ranks). Throws NotBijective when m does not pair all
/// facets of a with all facets of b.
bool is_intersection_preserving(const SimplicialComplex& a,
                                const SimplicialComplex& b,
                                const FacetBijection& m);

/// Runs is_intersection_preserving and returns a copy with `verified` set.
FacetBijection verify_map(const SimplicialComplex& a, const SimplicialComplex& b,
                          FacetBijection m);

/// Backtracking search for intersection-preserving bijections, pruned by
/// per-facet sorted row multisets of the two matrices. Deterministic order;
/// returns up to `limit` verified maps (empty when none exist).
std::vector<FacetBijection> find_intersection_preserving_maps(const SimplicialComplex& a,
                                                              const SimplicialComplex& b,
                                                              std::size_t limit = 1);

/// Facet pairing induced by a vertex isomorphism (default facet orders).
/// Throws BadParameter when phi is not an isomorphism from a to b.
FacetBijection induced_facet_map(const SimplicialComplex& a, const SimplicialComplex& b,
                                 const VertexMap& phi);

}  // namespace trishell
