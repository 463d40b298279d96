// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trishell/complex.hpp"
#include "trishell/isomorphism.hpp"

namespace trishell {

enum class ShellKind { lineal, cyclic };

const char* to_string(ShellKind kind);

/// Detected shell pattern: a facet order where consecutive facets intersect
/// in rank n and all other pairs in rank n-1, the first/last pair included
/// for cyclic shells (n = dimension, facet rank n+1).
struct ShellWitness {
  ShellKind kind = ShellKind::lineal;
  int dim = 0;
  std::vector<Simplex> order;
  std::optional<std::string> catalog_id;

  int k() const { return static_cast<int>(order.size()); }
};

/// Finds a facet order realizing the lineal or cyclic pattern, if any.
/// catalog_id is filled for the parametric wheel families (structurally)
/// and for the named exceptional shells (by canonical form).
/// Throws MixedRank when facets have unequal ranks.
std::optional<ShellWitness> detect_shell(const SimplicialComplex& c);

/// Wheel shells nLW_k / nCW_k: facets {v_i, v_{i+1}} ∪ X over a common core
/// X of n-1 vertices, with the rim a path (lineal) or a cycle (cyclic).
/// Decimal labels; rim first, then core. Throws BadParameter.
SimplicialComplex wheel_shell(ShellKind kind, int n, int k);

/// Cone of a 2-shell to a new apex: facets {X ∪ {apex}}. The result is a
/// 3-shell of the same kind and length. Throws NotAShell / LabelClash.
SimplicialComplex lift_2_shell(const SimplicialComplex& s, const Label& apex_label);

/// Inverse of lifting: the 2-complex spanned by the rank-3 faces avoiding
/// `apex`. Throws VertexNotFound; BadParameter when apex is not common to
/// every facet.
SimplicialComplex shell_shadow(const SimplicialComplex& c, const Label& apex_label);

/// Named fixture: an exceptional shell together with how it arises.
struct CatalogEntry {
  std::string name;
  SimplicialComplex complex;
  std::string source;  // construction provenance, e.g. "closure of LS_5"
};

/// The fixed exceptional-shell fixtures (both dimensions).
const std::vector<CatalogEntry>& shell_catalog();

/// Fixture or parametric wheel by name ("LS_5", "CF_8", "3CW_12", ...).
std::optional<SimplicialComplex> catalog_lookup(const std::string& name);

/// The second construction of LF_7, together with the vertex map from the
/// catalog fixture onto it (a stored cross-check that both agree).
std::pair<SimplicialComplex, VertexMap> lf7_alternative_presentation();

/// Names a shell: wheel families are recognized structurally, exceptional
/// shells by canonical-form match against the catalog.
std::optional<std::string> identify_shell(const SimplicialComplex& c,
                                          const ShellWitness& witness);

/// When the given facets span a cyclic wheel nCW_k, returns its core (the
/// n-1 vertices common to every facet); nullopt otherwise.
std::optional<Simplex> cyclic_wheel_core(const std::vector<Simplex>& star_facets);

/// Isomorphism classes per facet count, each represented canonically.
struct EnumerationResult {
  int n = 0;
  ShellKind kind = ShellKind::lineal;
  // (k, class representatives sorted by canonical key)
  std::vector<std::pair<int, std::vector<SimplicialComplex>>> classes_by_k;

  const std::vector<SimplicialComplex>* classes_for(int k) const;
};

inline constexpr int kMaxEnumerationFacets = 12;

/// Exhaustive classification of n-lineal shells with up to k_max facets,
/// n in {2, 3}: grown from the two-facet shell by gluing one facet at a
/// time onto an end of the witness order (every lineal shell minus its last
/// facet is lineal, so this is complete), deduplicated by canonical form.
/// Throws BadParameter.
EnumerationResult enumerate_lineal_shells(int n, int k_max);

/// Exhaustive classification of n-cyclic shells with up to k_max facets.
/// k = 3 is seeded with nCW_3 (all three pairwise intersections at rank n and
/// pairwise distinct); every longer cyclic shell is a lineal shell plus a
/// closing facet that must contain H_0 ∩ H_{k-1}, one vertex of H_0 \ H_{k-1}
/// and one of H_{k-1} \ H_0, leaving at most four candidates per class.
/// Throws BadParameter.
EnumerationResult enumerate_cyclic_shells(int n, int k_max);

struct ClassificationEntry {
  int k = 0;
  std::string canonical_key;
  std::optional<std::string> name;
};

/// Pairing of every enumerated class with a catalog name, plus completeness
/// against the fixtures.
struct ClassificationReport {
  int n = 0;
  int k_max = 0;
  std::vector<ClassificationEntry> lineal;
  std::vector<ClassificationEntry> cyclic;
  std::vector<std::string> unnamed_keys;      // enumerated classes with no name
  std::vector<std::string> missing_catalog;   // fixtures of size <= k_max not enumerated
  bool ok = false;
};

ClassificationReport verify_classification(int n, int k_max);

}  // namespace trishell
