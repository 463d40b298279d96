// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trishell/complex.hpp"

namespace trishell {

/// Vertex-count bound for the factorial-flavoured searches below.
inline constexpr std::size_t kDefaultSizeLimit = 16;

/// Exhaustive isomorphism search. Returns the first map found when source
/// vertices are scanned in label order and candidate images are tried in
/// label order, so the result is deterministic. Throws SizeLimit when either
/// complex has more vertices than `size_limit`.
std::optional<VertexMap> are_isomorphic(const SimplicialComplex& a,
                                        const SimplicialComplex& b,
                                        std::size_t size_limit = kDefaultSizeLimit);

/// Checks that phi is a simplicial isomorphism from a onto b.
bool is_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                    const VertexMap& phi);

/// Applies a total injective label map to a complex.
SimplicialComplex relabel(const SimplicialComplex& c, const VertexMap& phi);

/// Relabeling-invariant encoding of a complex: the facet list after an
/// extremal renaming of the vertices to 0..n-1.
struct CanonicalForm {
  std::vector<std::vector<int>> facets;

  /// Byte-comparable key, e.g. "0,1,2;0,1,3".
  std::string key() const;

  /// Rebuilds a complex labelled "0".."n-1" from the canonical facets.
  SimplicialComplex to_complex() const;

  auto operator<=>(const CanonicalForm& other) const = default;
};

/// Canonical form such that canonical_form(a) == canonical_form(b) iff
/// are_isomorphic(a, b) succeeds. Computed as the minimum relabelled facet
/// list over vertex orderings compatible with an iterated degree-refinement
/// partition (individualizing one vertex at a time inside symmetric classes),
/// which prunes the plain factorial scan without affecting the minimum's
/// invariance. Throws SizeLimit past `size_limit` vertices.
CanonicalForm canonical_form(const SimplicialComplex& c,
                             std::size_t size_limit = kDefaultSizeLimit);

}  // namespace trishell
