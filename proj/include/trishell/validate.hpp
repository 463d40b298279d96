// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trishell/complex.hpp"

namespace trishell {

/// Combinatorial surface tests for a 2-dimensional complex.
struct SurfaceCheck {
  bool closed = false;     // every edge lies in exactly two triangles
  bool connected = false;  // triangle adjacency graph is connected
  long long euler = 0;     // V - E + F
  bool is_sphere = false;  // closed && connected && euler == 2
};

struct VertexLinkResult {
  Label vertex;
  SurfaceCheck link;
};

struct EdgeStarResult {
  Simplex edge;
  std::size_t star_size = 0;
  bool cyclic = false;
};

/// Full report of the closed-3-manifold checks. Validation never throws;
/// failures are data so callers can explain them.
struct ValidationReport {
  bool dimension_ok = false;  // all facets are tetrahedra
  int dimension = -1;
  bool is_pseudo_manifold = false;
  std::vector<std::pair<Simplex, int>> bad_triangles;  // triangle, facet count != 2
  std::vector<VertexLinkResult> vertex_link_results;   // sorted by label
  std::vector<EdgeStarResult> edge_link_results;       // sorted by edge
  bool all_links_spheres = false;
  bool all_edges_cyclic = false;
  bool verdict = false;

  /// Names of the failing sub-checks, in check order. Empty iff verdict.
  std::vector<std::string> failed_checks() const;
};

/// Rank-3 faces whose tetrahedron count differs from two.
/// Throws WrongDimension unless every facet has rank 4.
std::vector<std::pair<Simplex, int>> check_pseudo_manifold(const SimplicialComplex& c);

/// Throws WrongDimension unless every facet has rank 3.
SurfaceCheck surface_is_sphere(const SimplicialComplex& s);

/// Coherent-orientation propagation over shared edges, per component.
/// Throws WrongDimension / NotSurfaceLike (edge in three or more triangles).
bool surface_is_orientable(const SimplicialComplex& s);

/// Aggregate check: dimension 3, pseudo-manifold, every vertex link a
/// 2-sphere, every edge star cyclically ordered.
ValidationReport validate_triangulation(const SimplicialComplex& c);

}  // namespace trishell
