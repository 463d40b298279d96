// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace trishell {

namespace {

nlohmann::json simplex_to_json(const Simplex& s) {
  return nlohmann::json(s);
}

nlohmann::json simplices_to_json(const std::vector<Simplex>& list) {
  nlohmann::json out = nlohmann::json::array();
  for (const Simplex& s : list) out.push_back(simplex_to_json(s));
  return out;
}

}  // namespace

NamedComplex parse_facet_text(std::istream& in) {
  std::vector<Simplex> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream words(line);
    Simplex facet;
    std::string token;
    while (words >> token) facet.push_back(token);
    if (facet.empty()) continue;
    try {
      facets.push_back(make_simplex(facet));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BadLabel) throw;
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (facets.empty()) {
    throw Error(ErrorCode::EmptyInput, "no facets in input");
  }
  return {std::nullopt, SimplicialComplex::from_facets(facets)};
}

NamedComplex parse_facet_text(const std::string& text) {
  std::istringstream in(text);
  return parse_facet_text(in);
}

std::string to_facet_text(const SimplicialComplex& c, const std::optional<std::string>& name) {
  std::ostringstream out;
  if (name) out << "# " << *name << "\n";
  for (const Simplex& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << f[i];
    }
    out << '\n';
  }
  return out.str();
}

NamedComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected {\"name\": ..., \"facets\": [[...], ...]}");
  }
  NamedComplex out;
  if (j.contains("name") && !j["name"].is_null()) {
    if (!j["name"].is_string()) {
      throw Error(ErrorCode::ParseError, "\"name\" must be a string");
    }
    out.name = j["name"].get<std::string>();
  }
  std::vector<Simplex> facets;
  for (const auto& facet : j["facets"]) {
    if (!facet.is_array()) {
      throw Error(ErrorCode::ParseError, "facets must be arrays of labels");
    }
    Simplex s;
    for (const auto& label : facet) {
      if (!label.is_string()) {
        throw Error(ErrorCode::ParseError, "vertex labels must be strings");
      }
      s.push_back(label.get<std::string>());
    }
    facets.push_back(make_simplex(s));
  }
  if (facets.empty()) {
    throw Error(ErrorCode::EmptyInput, "no facets in input");
  }
  out.complex = SimplicialComplex::from_facets(facets);
  return out;
}

nlohmann::json complex_to_json(const SimplicialComplex& c, const std::optional<std::string>& name) {
  nlohmann::json j;
  j["name"] = name ? nlohmann::json(*name) : nlohmann::json(nullptr);
  j["facets"] = simplices_to_json(c.facets());
  return j;
}

NamedComplex parse_complex(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') {
      nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
      if (j.is_discarded()) {
        throw Error(ErrorCode::ParseError, "invalid JSON");
      }
      return complex_from_json(j);
    }
    break;
  }
  return parse_facet_text(text);
}

NamedComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_complex(buffer.str());
}

FacetBijection map_from_json(const nlohmann::json& j, const SimplicialComplex& a,
                             const SimplicialComplex& b) {
  if (!j.is_array()) {
    throw Error(ErrorCode::ParseError, "expected a JSON list of [source, target] index pairs");
  }
  FacetBijection f;
  f.source_order = a.facets();
  f.target_order = b.facets();
  f.assignment.assign(f.source_order.size(), -1);
  if (j.size() != f.source_order.size() || b.facet_count() != a.facet_count()) {
    throw Error(ErrorCode::NotBijective, "map must pair every facet exactly once");
  }
  std::vector<bool> src_seen(f.source_order.size(), false);
  std::vector<bool> tgt_seen(f.target_order.size(), false);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "map entries must be [source, target] index pairs");
    }
    long long s = pair[0].get<long long>();
    long long t = pair[1].get<long long>();
    if (s < 0 || t < 0 || s >= static_cast<long long>(f.source_order.size()) ||
        t >= static_cast<long long>(f.target_order.size())) {
      throw Error(ErrorCode::ParseError, "facet index out of range");
    }
    if (src_seen[static_cast<std::size_t>(s)] || tgt_seen[static_cast<std::size_t>(t)]) {
      throw Error(ErrorCode::NotBijective, "map repeats a facet index");
    }
    src_seen[static_cast<std::size_t>(s)] = true;
    tgt_seen[static_cast<std::size_t>(t)] = true;
    f.assignment[static_cast<std::size_t>(s)] = static_cast<int>(t);
  }
  return f;
}

FacetBijection load_map(const std::string& path, const SimplicialComplex& a,
                        const SimplicialComplex& b) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::ParseError, "invalid JSON in '" + path + "'");
  }
  return map_from_json(j, a, b);
}

nlohmann::json map_to_json(const FacetBijection& f, const SimplicialComplex& a,
                           const SimplicialComplex& b) {
  // Pairs are emitted against the default facet orders.
  const auto default_a = a.facets();
  const auto default_b = b.facets();
  auto index_in = [](const std::vector<Simplex>& list, const Simplex& facet) {
    auto it = std::lower_bound(list.begin(), list.end(), facet);
    return static_cast<int>(it - list.begin());
  };
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < f.source_order.size(); ++i) {
    out.push_back({index_in(default_a, f.source_order[i]),
                   index_in(default_b, f.target_order[static_cast<std::size_t>(f.assignment[i])])});
  }
  return out;
}

nlohmann::json matrix_to_json(const IntersectionMatrix& m) {
  nlohmann::json j;
  j["facet_order"] = simplices_to_json(m.facet_order);
  j["entries"] = m.entries;
  return j;
}

std::string matrix_to_csv(const IntersectionMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.facet_order.size(); ++i) {
    if (i) out << ',';
    out << i;
  }
  out << '\n';
  for (const auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json report_to_json(const ValidationReport& r) {
  nlohmann::json j;
  j["dimension"] = r.dimension;
  j["dimension_ok"] = r.dimension_ok;
  j["is_pseudo_manifold"] = r.is_pseudo_manifold;
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& [triangle, count] : r.bad_triangles) {
    bad.push_back({{"count", count}, {"triangle", simplex_to_json(triangle)}});
  }
  j["bad_triangles"] = bad;
  nlohmann::json links = nlohmann::json::array();
  for (const auto& link : r.vertex_link_results) {
    links.push_back({{"closed", link.link.closed},
                     {"connected", link.link.connected},
                     {"euler", link.link.euler},
                     {"is_sphere", link.link.is_sphere},
                     {"vertex", link.vertex}});
  }
  j["vertex_link_results"] = links;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& edge : r.edge_link_results) {
    edges.push_back({{"cyclic", edge.cyclic},
                     {"edge", simplex_to_json(edge.edge)},
                     {"star_size", edge.star_size}});
  }
  j["edge_link_results"] = edges;
  j["all_links_spheres"] = r.all_links_spheres;
  j["all_edges_cyclic"] = r.all_edges_cyclic;
  j["failed_checks"] = r.failed_checks();
  j["verdict"] = r.verdict;
  return j;
}

nlohmann::json witness_to_json(const ShellWitness& w) {
  nlohmann::json j;
  j["kind"] = to_string(w.kind);
  j["dim"] = w.dim;
  j["k"] = w.k();
  j["order"] = simplices_to_json(w.order);
  j["catalog_id"] = w.catalog_id ? nlohmann::json(*w.catalog_id) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json enumeration_to_json(const EnumerationResult& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, classes] : r.classes_by_k) {
    nlohmann::json entry;
    entry["n"] = r.n;
    entry["kind"] = to_string(r.kind);
    entry["k"] = k;
    entry["count"] = classes.size();
    nlohmann::json keys = nlohmann::json::array();
    nlohmann::json names = nlohmann::json::array();
    for (const SimplicialComplex& rep : classes) {
      keys.push_back(canonical_form(rep).key());
      auto witness = detect_shell(rep);
      names.push_back(witness && witness->catalog_id ? nlohmann::json(*witness->catalog_id)
                                                     : nlohmann::json(nullptr));
    }
    entry["canonical_forms"] = keys;
    entry["names"] = names;
    out.push_back(entry);
  }
  return out;
}

nlohmann::json classification_to_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k_max"] = r.k_max;
  auto entries = [](const std::vector<ClassificationEntry>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& entry : list) {
      out.push_back({{"k", entry.k},
                     {"canonical_form", entry.canonical_key},
                     {"name", entry.name ? nlohmann::json(*entry.name) : nlohmann::json(nullptr)}});
    }
    return out;
  };
  j["lineal"] = entries(r.lineal);
  j["cyclic"] = entries(r.cyclic);
  j["unnamed"] = r.unnamed_keys;
  j["missing_catalog"] = r.missing_catalog;
  j["ok"] = r.ok;
  return j;
}

nlohmann::json vertex_map_to_json(const VertexMap& phi) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [from, to] : phi) j[from] = to;
  return j;
}

nlohmann::json reconstruction_to_json(const ReconstructionReport& r) {
  nlohmann::json j;
  j["inputs_valid"] = r.inputs_valid;
  j["validation_a"] = report_to_json(r.validation_a);
  j["validation_b"] = report_to_json(r.validation_b);
  j["map_intersection_preserving"] = r.map_intersection_preserving;
  j["rank_bijections"] = {{"rank2", r.rank_bijection_ok.rank2},
                          {"rank3", r.rank_bijection_ok.rank3},
                          {"rank4", r.rank_bijection_ok.rank4}};
  nlohmann::json forward = nlohmann::json::object();
  for (const auto& [v, image] : r.vertex_images) forward[v] = image;
  j["vertex_images"] = forward;
  nlohmann::json backward = nlohmann::json::object();
  for (const auto& [v, image] : r.inverse_images) backward[v] = image;
  j["inverse_images"] = backward;
  j["all_singletons"] = r.all_singletons;
  j["phi"] = r.phi ? vertex_map_to_json(*r.phi) : nlohmann::json(nullptr);
  j["phi_verified"] = r.phi_verified;
  j["failure_stage"] =
      r.failure_stage ? nlohmann::json(to_string(*r.failure_stage)) : nlohmann::json(nullptr);
  j["offending_vertex"] =
      r.offending_vertex ? nlohmann::json(*r.offending_vertex) : nlohmann::json(nullptr);
  return j;
}

}  // namespace trishell
