// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trishell/complex.hpp"
#include "trishell/intersection.hpp"
#include "trishell/reconstruct.hpp"
#include "trishell/shells.hpp"
#include "trishell/validate.hpp"

namespace trishell {

struct NamedComplex {
  std::optional<std::string> name;
  SimplicialComplex complex;
};

// Facet-list text format: one facet per line, labels whitespace-separated,
// '#' starts a comment. Dominated duplicates are absorbed silently; bad
// labels are rejected loudly (BadLabel), empty input with EmptyInput.
NamedComplex parse_facet_text(std::istream& in);
NamedComplex parse_facet_text(const std::string& text);
std::string to_facet_text(const SimplicialComplex& c,
                          const std::optional<std::string>& name = std::nullopt);

// JSON form: {"name": string, "facets": [[label, ...], ...]}.
NamedComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SimplicialComplex& c,
                               const std::optional<std::string>& name = std::nullopt);

/// Reads either format, chosen by a leading '{' (after whitespace/comments).
NamedComplex load_complex(const std::string& path);
NamedComplex parse_complex(const std::string& text);

// Facet-map files: JSON list of [source-facet-index, target-facet-index]
// pairs, indices into the default (label-lexicographic) facet orders.
FacetBijection map_from_json(const nlohmann::json& j, const SimplicialComplex& a,
                             const SimplicialComplex& b);
FacetBijection load_map(const std::string& path, const SimplicialComplex& a,
                        const SimplicialComplex& b);
nlohmann::json map_to_json(const FacetBijection& f, const SimplicialComplex& a,
                           const SimplicialComplex& b);

nlohmann::json matrix_to_json(const IntersectionMatrix& m);
std::string matrix_to_csv(const IntersectionMatrix& m);

nlohmann::json report_to_json(const ValidationReport& r);
nlohmann::json witness_to_json(const ShellWitness& w);
nlohmann::json enumeration_to_json(const EnumerationResult& r);
nlohmann::json classification_to_json(const ClassificationReport& r);
nlohmann::json reconstruction_to_json(const ReconstructionReport& r);
nlohmann::json vertex_map_to_json(const VertexMap& phi);

}  // namespace trishell
