// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trishell/complex.hpp"
#include "trishell/intersection.hpp"
#include "trishell/validate.hpp"

namespace trishell {

/// Extension of a facet bijection to an arbitrary face: the intersection of
/// the images of every facet containing it (a vertex set, not necessarily a
/// face of the target). Throws FaceNotFound when sigma lies in no source
/// facet.
std::vector<Label> extended_image(const FacetBijection& f, const Simplex& sigma);

/// Per-rank verdicts for the face bijections induced by a facet bijection.
struct RankBijectionCheck {
  bool rank4 = false;  // facets: the bijection itself
  bool rank3 = false;  // triangles, via the two facets containing each
  bool rank2 = false;  // edges, via the wheel pattern of image stars

  bool all() const { return rank4 && rank3 && rank2; }
};

/// Checks that the extension maps rank-3 faces bijectively onto rank-3
/// faces (each triangle is the intersection of its two facets) and rank-2
/// faces bijectively onto rank-2 faces (the image of each edge star must
/// span a cyclic wheel whose two common vertices give the image edge).
/// Throws InvalidTriangulation unless both inputs validate, BadParameter
/// when the map is not intersection preserving.
RankBijectionCheck check_rank_bijections(const SimplicialComplex& a,
                                         const SimplicialComplex& b,
                                         const FacetBijection& f);

enum class FailureStage {
  rank_bijection,
  forward_singleton,
  inverse_singleton,
  not_isomorphism,
  facet_mismatch,
};

const char* to_string(FailureStage stage);

/// Everything the reconstruction pipeline learned. phi is only present when
/// every forward and inverse image is a singleton; phi_verified additionally
/// certifies that phi is an isomorphism agreeing with f on every facet.
struct ReconstructionReport {
  bool inputs_valid = false;
  ValidationReport validation_a;
  ValidationReport validation_b;
  bool map_intersection_preserving = false;
  RankBijectionCheck rank_bijection_ok;
  std::map<Label, std::vector<Label>> vertex_images;   // F({v}) per source vertex
  std::map<Label, std::vector<Label>> inverse_images;  // F^{-1}({v'}) per target vertex
  bool all_singletons = false;
  std::optional<VertexMap> phi;
  bool phi_verified = false;
  std::optional<FailureStage> failure_stage;
  std::optional<Label> offending_vertex;  // set when an interior singleton step fails
};

/// Runs the full pipeline: validation, rank bijections, the per-facet and
/// per-triangle singleton steps, vertex-image extraction, assembly of phi and
/// certification. Never throws; failures land in the report with the
/// earliest failing stage recorded.
ReconstructionReport reconstruct_isomorphism(const SimplicialComplex& a,
                                             const SimplicialComplex& b,
                                             const FacetBijection& f);

/// True iff phi is a simplicial isomorphism from a onto b that maps each
/// source facet to exactly its f-image.
bool certify(const SimplicialComplex& a, const SimplicialComplex& b,
             const VertexMap& phi, const FacetBijection& f);

}  // namespace trishell
