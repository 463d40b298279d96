// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trishell/error.hpp"

namespace trishell {

using Label = std::string;

// A simplex is kept as a sorted, duplicate-free list of vertex labels.
using Simplex = std::vector<Label>;

// Bijection between the vertex sets of two complexes, keyed by source label.
using VertexMap = std::map<Label, Label>;

/// A label is a nonempty token with no whitespace and no '#'.
bool is_valid_label(const Label& label);

/// Sorts and deduplicates; throws BadLabel / EmptyInput on malformed input.
Simplex make_simplex(std::vector<Label> labels);

/// Abstract simplicial complex stored by its facets (maximal simplices).
///
/// Only facets are stored; lower faces are derived on demand. Instances are
/// immutable after construction, so all member functions are safe for
/// concurrent reads. Vertex labels are opaque strings; internally vertices
/// are indexed by their position in the sorted label list, which makes the
/// index order coincide with label order.
class SimplicialComplex {
 public:
  /// Builds a complex from facet candidates. Duplicates and dominated
  /// simplices are absorbed; every remaining facet is maximal.
  static SimplicialComplex from_facets(const std::vector<Simplex>& facet_lists);

  const std::vector<Label>& vertex_labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t facet_count() const { return facets_.size(); }

  /// Facets as sorted index vectors, lexicographically sorted. The index
  /// order equals label order, so this list is also label-lexicographic.
  const std::vector<std::vector<int>>& facet_ids() const { return facets_; }

  Simplex facet(std::size_t i) const;
  std::vector<Simplex> facets() const;

  /// Largest facet rank (vertex count of a facet).
  int max_rank() const;

  /// Rank shared by all facets, or nullopt when facets have mixed ranks.
  std::optional<int> uniform_rank() const;

  /// Dimension of the complex: max facet rank minus one.
  int dimension() const { return max_rank() - 1; }

  bool has_vertex(const Label& label) const;

  /// Index of a label in vertex_labels(), or -1 when absent.
  int vertex_id(const Label& label) const;
  const Label& label_of(int id) const { return labels_[static_cast<std::size_t>(id)]; }

  /// Number of facets containing the vertex.
  int vertex_degree(int id) const;

  /// Translates labels to ids; nullopt if any label is not a vertex.
  std::optional<std::vector<int>> to_ids(const Simplex& simplex) const;
  Simplex to_labels(const std::vector<int>& ids) const;

  /// True iff the simplex is a face, i.e. a subset of some facet.
  bool has_face(const Simplex& simplex) const;

  /// All faces with exactly r vertices, deduplicated and sorted.
  /// Empty when r exceeds every facet rank; throws BadParameter for r < 1.
  std::vector<Simplex> faces_of_rank(int r) const;
  std::size_t count_faces_of_rank(int r) const;

  /// Indices (into facet_ids()) of the facets containing the given face.
  std::vector<int> facets_containing(const std::vector<int>& face) const;

  /// Link of a vertex in a 3-dimensional complex: the 2-complex spanned by
  /// {X - {v} : v in X, X a facet}. Throws VertexNotFound / WrongDimension.
  SimplicialComplex vertex_neighbourhood(const Label& v) const;

  bool operator==(const SimplicialComplex& other) const = default;

  /// Empty placeholder; every populated instance comes from from_facets.
  SimplicialComplex() = default;

 private:
  std::vector<Label> labels_;             // sorted, unique
  std::vector<std::vector<int>> facets_;  // sorted ids, list sorted lex
};

/// Facets around an edge. When `cyclic` is true, `facets` is ordered so that
/// consecutive entries (wrapping around) share a triangle.
struct EdgeStar {
  std::vector<Simplex> facets;
  bool cyclic = false;
};

/// Star of an edge in a 3-dimensional complex, with cyclic-order detection.
/// Throws FaceNotFound when the edge is not a face, WrongDimension when some
/// facet containing it is not a tetrahedron.
EdgeStar edge_star(const SimplicialComplex& c, const Simplex& edge);

/// As edge_star, but throws NotCyclic when no cyclic order exists.
std::vector<Simplex> edge_star_facets(const SimplicialComplex& c, const Simplex& edge);

// Small sorted-vector set helpers shared across modules.
std::vector<int> set_intersection_ids(const std::vector<int>& a, const std::vector<int>& b);
std::size_t intersection_size_ids(const std::vector<int>& a, const std::vector<int>& b);
Simplex simplex_intersection(const Simplex& a, const Simplex& b);
std::size_t simplex_intersection_size(const Simplex& a, const Simplex& b);
bool simplex_subset(const Simplex& sub, const Simplex& super);

}  // namespace trishell
