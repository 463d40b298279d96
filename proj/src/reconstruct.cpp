// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "trishell/isomorphism.hpp"
#include "trishell/shells.hpp"

namespace trishell {

const char* to_string(FailureStage stage) {
  switch (stage) {
    case FailureStage::rank_bijection: return "rank_bijection";
    case FailureStage::forward_singleton: return "forward_singleton";
    case FailureStage::inverse_singleton: return "inverse_singleton";
    case FailureStage::not_isomorphism: return "not_isomorphism";
    case FailureStage::facet_mismatch: return "facet_mismatch";
  }
  return "?";
}

std::vector<Label> extended_image(const FacetBijection& f, const Simplex& sigma) {
  Simplex s = make_simplex(sigma);
  std::optional<std::vector<Label>> acc;
  for (std::size_t i = 0; i < f.source_order.size(); ++i) {
    if (!simplex_subset(s, f.source_order[i])) continue;
    const Simplex& image = f.target_order[static_cast<std::size_t>(f.assignment[i])];
    if (!acc) {
      acc = image;
    } else {
      *acc = simplex_intersection(*acc, image);
    }
  }
  if (!acc) {
    throw Error(ErrorCode::FaceNotFound, "simplex lies in no source facet");
  }
  return *acc;
}

namespace {

// Memoized extension map over the faces that the pipeline revisits.
class ExtensionCache {
 public:
  explicit ExtensionCache(const FacetBijection& f) : f_(f) {}

  const std::vector<Label>& image(const Simplex& face) {
    auto it = cache_.find(face);
    if (it == cache_.end()) {
      it = cache_.emplace(face, extended_image(f_, face)).first;
    }
    return it->second;
  }

 private:
  const FacetBijection& f_;
  std::map<Simplex, std::vector<Label>> cache_;
};

std::vector<Label> intersect_all(const std::vector<std::vector<Label>>& sets) {
  std::vector<Label> acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    std::vector<Label> next;
    std::set_intersection(acc.begin(), acc.end(), sets[i].begin(), sets[i].end(),
                          std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

// The rank-sized subsets of `simplex` that contain v.
std::vector<Simplex> subfaces_containing(const Simplex& simplex, const Label& v,
                                         std::size_t rank) {
  Simplex others;
  for (const Label& u : simplex) {
    if (u != v) others.push_back(u);
  }
  std::vector<Simplex> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == rank - 1) {
      Simplex face{v};
      for (std::size_t i : pick) face.push_back(others[i]);
      std::sort(face.begin(), face.end());
      out.push_back(std::move(face));
      return;
    }
    for (std::size_t i = start; i + (rank - 1 - pick.size()) <= others.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

RankBijectionCheck check_rank_bijections(const SimplicialComplex& a,
                                         const SimplicialComplex& b,
                                         const FacetBijection& f) {
  if (!validate_triangulation(a).verdict || !validate_triangulation(b).verdict) {
    throw Error(ErrorCode::InvalidTriangulation,
                "rank bijections are only defined between valid triangulations");
  }
  if (!is_intersection_preserving(a, b, f)) {
    throw Error(ErrorCode::BadParameter, "facet map is not intersection preserving");
  }

  RankBijectionCheck check;
  check.rank4 = true;  // the facet bijection itself

  // Triangles: each is the intersection of exactly the two facets containing
  // it, and its image must be the intersection of their images.
  {
    const auto triangles_a = a.faces_of_rank(3);
    const auto triangles_b = b.faces_of_rank(3);
    std::set<Simplex> b_triangles(triangles_b.begin(), triangles_b.end());
    std::set<Simplex> images;
    bool ok = triangles_a.size() == triangles_b.size();
    for (const Simplex& t : triangles_a) {
      if (!ok) break;
      std::vector<std::vector<Label>> star_images;
      for (std::size_t i = 0; i < f.source_order.size(); ++i) {
        if (simplex_subset(t, f.source_order[i])) {
          star_images.push_back(f.target_order[static_cast<std::size_t>(f.assignment[i])]);
        }
      }
      if (star_images.size() != 2) {
        ok = false;
        break;
      }
      std::vector<Label> image = intersect_all(star_images);
      ok = image.size() == 3 && b_triangles.count(image) && images.insert(image).second;
    }
    check.rank3 = ok && images.size() == b_triangles.size();
  }

  // Edges: the image of an edge star must span a cyclic wheel, whose core
  // is the image edge.
  {
    const auto edges_a = a.faces_of_rank(2);
    const auto edges_b = b.faces_of_rank(2);
    std::set<Simplex> b_edges(edges_b.begin(), edges_b.end());
    std::set<Simplex> images;
    bool ok = edges_a.size() == edges_b.size();
    for (const Simplex& e : edges_a) {
      if (!ok) break;
      std::vector<Simplex> star_images;
      for (std::size_t i = 0; i < f.source_order.size(); ++i) {
        if (simplex_subset(e, f.source_order[i])) {
          star_images.push_back(f.target_order[static_cast<std::size_t>(f.assignment[i])]);
        }
      }
      auto core = cyclic_wheel_core(star_images);
      ok = core && core->size() == 2 && b_edges.count(*core) && images.insert(*core).second;
    }
    check.rank2 = ok && images.size() == b_edges.size();
  }

  return check;
}

ReconstructionReport reconstruct_isomorphism(const SimplicialComplex& a,
                                             const SimplicialComplex& b,
                                             const FacetBijection& f) {
  ReconstructionReport report;
  report.validation_a = validate_triangulation(a);
  report.validation_b = validate_triangulation(b);
  report.inputs_valid = report.validation_a.verdict && report.validation_b.verdict;

  bool usable = true;
  try {
    report.map_intersection_preserving = is_intersection_preserving(a, b, f);
  } catch (const Error&) {
    usable = false;
    report.map_intersection_preserving = false;
  }
  if (!usable) {
    report.failure_stage = FailureStage::rank_bijection;
    return report;
  }

  // The extension map and its one-sided inverse are defined for any facet
  // pairing, so the vertex images are always reported for diagnostics.
  ExtensionCache forward(f);
  const FacetBijection f_inv = f.inverse();
  ExtensionCache backward(f_inv);
  for (const Label& v : a.vertex_labels()) {
    report.vertex_images[v] = forward.image(Simplex{v});
  }
  for (const Label& v : b.vertex_labels()) {
    report.inverse_images[v] = backward.image(Simplex{v});
  }
  bool forward_singletons = true;
  for (const auto& [v, image] : report.vertex_images) {
    forward_singletons = forward_singletons && image.size() == 1;
  }
  bool inverse_singletons = true;
  for (const auto& [v, image] : report.inverse_images) {
    inverse_singletons = inverse_singletons && image.size() == 1;
  }
  report.all_singletons = forward_singletons && inverse_singletons;

  auto fail = [&](FailureStage stage) {
    if (!report.failure_stage) report.failure_stage = stage;
  };

  // Degenerate inputs or a rank-breaking map stop here: no rank checks,
  // no partial phi.
  if (!report.inputs_valid || !report.map_intersection_preserving) {
    fail(FailureStage::rank_bijection);
    return report;
  }

  report.rank_bijection_ok = check_rank_bijections(a, b, f);
  if (!report.rank_bijection_ok.all()) {
    fail(FailureStage::rank_bijection);
    return report;
  }

  // Interior steps of the extension argument, replayed as runtime checks
  // per vertex: the triangle images inside one facet pin a single vertex
  // and agree with the edge images inside each of its triangles, the pinned
  // vertex is the same across all facets around v, and it is exactly the
  // intersection of all triangle images around v. Violations name the
  // vertex.
  const auto facets_a = a.facets();
  const auto triangles_a = a.faces_of_rank(3);
  for (const Label& v : a.vertex_labels()) {
    bool ok = true;
    std::vector<std::vector<Label>> per_facet_pins;
    for (const Simplex& x : facets_a) {
      if (!std::binary_search(x.begin(), x.end(), v)) continue;
      std::vector<std::vector<Label>> triangle_images;
      for (const Simplex& t : subfaces_containing(x, v, 3)) {
        triangle_images.push_back(forward.image(t));
      }
      std::vector<Label> pinned = intersect_all(triangle_images);
      if (pinned.size() != 1) ok = false;
      // inside every triangle of x, the two edge images pin the same vertex
      for (const Simplex& t : subfaces_containing(x, v, 3)) {
        std::vector<std::vector<Label>> edge_images;
        for (const Simplex& e : subfaces_containing(t, v, 2)) {
          edge_images.push_back(forward.image(e));
        }
        std::vector<Label> from_edges = intersect_all(edge_images);
        if (from_edges.size() != 1 || from_edges != pinned) ok = false;
      }
      per_facet_pins.push_back(std::move(pinned));
    }
    // one pinned vertex across the whole star of v
    for (const auto& pinned : per_facet_pins) {
      if (pinned != per_facet_pins.front()) ok = false;
    }
    // and it equals the intersection of all triangle images around v
    std::vector<std::vector<Label>> star_triangle_images;
    for (const Simplex& t : triangles_a) {
      if (std::binary_search(t.begin(), t.end(), v)) {
        star_triangle_images.push_back(forward.image(t));
      }
    }
    if (intersect_all(star_triangle_images) != report.vertex_images.at(v)) ok = false;
    if (!ok) {
      report.offending_vertex = v;
      fail(FailureStage::not_isomorphism);
      return report;
    }
  }

  if (!forward_singletons) {
    fail(FailureStage::forward_singleton);
    return report;
  }
  if (!inverse_singletons) {
    fail(FailureStage::inverse_singleton);
    return report;
  }

  VertexMap phi;
  for (const auto& [v, image] : report.vertex_images) phi[v] = image.front();
  report.phi = phi;

  if (!is_isomorphism(a, b, phi)) {
    fail(FailureStage::not_isomorphism);
    return report;
  }
  for (std::size_t i = 0; i < f.source_order.size(); ++i) {
    Simplex mapped;
    mapped.reserve(f.source_order[i].size());
    for (const Label& v : f.source_order[i]) mapped.push_back(phi.at(v));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != f.target_order[static_cast<std::size_t>(f.assignment[i])]) {
      fail(FailureStage::facet_mismatch);
      return report;
    }
  }
  report.phi_verified = true;
  return report;
}

bool certify(const SimplicialComplex& a, const SimplicialComplex& b,
             const VertexMap& phi, const FacetBijection& f) {
  if (!is_facet_pairing(a, b, f)) return false;
  if (!is_isomorphism(a, b, phi)) return false;
  for (std::size_t i = 0; i < f.source_order.size(); ++i) {
    Simplex mapped;
    mapped.reserve(f.source_order[i].size());
    for (const Label& v : f.source_order[i]) {
      auto it = phi.find(v);
      if (it == phi.end()) return false;
      mapped.push_back(it->second);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != f.target_order[static_cast<std::size_t>(f.assignment[i])]) return false;
  }
  return true;
}

}  // namespace trishell
