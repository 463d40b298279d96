// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "trishell/generators.hpp"
#include "trishell/io.hpp"
#include "trishell/isomorphism.hpp"
#include "trishell/reconstruct.hpp"
#include "trishell/shells.hpp"
#include "trishell/validate.hpp"

namespace py = pybind11;
using namespace trishell;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

FacetBijection pairs_to_map(const SimplicialComplex& a, const SimplicialComplex& b,
                            const std::vector<std::pair<int, int>>& pairs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [s, t] : pairs) j.push_back({s, t});
  return verify_map(a, b, map_from_json(j, a, b));
}

std::vector<std::pair<int, int>> map_to_pairs(const FacetBijection& f,
                                              const SimplicialComplex& a,
                                              const SimplicialComplex& b) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& entry : map_to_json(f, a, b)) {
    pairs.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return pairs;
}

StandardKind kind_from_string(const std::string& kind) {
  if (kind == "simplex_boundary_4") return StandardKind::simplex_boundary_4;
  if (kind == "cycle_join") return StandardKind::cycle_join;
  if (kind == "cross_polytope_3") return StandardKind::cross_polytope_3;
  throw Error(ErrorCode::BadParameter, "unknown construction '" + kind + "'");
}

ShellKind shell_kind_from_string(const std::string& kind) {
  if (kind == "lineal") return ShellKind::lineal;
  if (kind == "cyclic") return ShellKind::cyclic;
  throw Error(ErrorCode::BadParameter, "unknown shell kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "combinatorial 3-manifold triangulations, intersection matrices and shells";

  py::register_exception<Error>(m, "Error");

  py::class_<SimplicialComplex>(m, "Complex")
      .def(py::init([](const std::vector<Simplex>& facets) {
             return SimplicialComplex::from_facets(facets);
           }),
           py::arg("facets"))
      .def_property_readonly("vertices", &SimplicialComplex::vertex_labels)
      .def_property_readonly("facets", [](const SimplicialComplex& c) { return c.facets(); })
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
      .def_property_readonly("facet_count", &SimplicialComplex::facet_count)
      .def("faces_of_rank", &SimplicialComplex::faces_of_rank, py::arg("r"))
      .def("has_face", &SimplicialComplex::has_face, py::arg("simplex"))
      .def("vertex_link", &SimplicialComplex::vertex_neighbourhood, py::arg("vertex"))
      .def("edge_star",
           [](const SimplicialComplex& c, const Simplex& edge) {
             EdgeStar star = edge_star(c, edge);
             return py::make_tuple(star.facets, star.cyclic);
           },
           py::arg("edge"))
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& c) {
        return "Complex(" + std::to_string(c.facet_count()) + " facets, " +
               std::to_string(c.vertex_count()) + " vertices)";
      });

  m.def("parse", [](const std::string& text) { return parse_complex(text).complex; },
        py::arg("text"), "parse the facet-list text or JSON form");
  m.def("to_text",
        [](const SimplicialComplex& c, const std::optional<std::string>& name) {
          return to_facet_text(c, name);
        },
        py::arg("complex"), py::arg("name") = std::nullopt);

  m.def("generate",
        [](const std::string& kind, int p, int q) {
          return generate_standard(kind_from_string(kind), p, q);
        },
        py::arg("kind"), py::arg("p") = 3, py::arg("q") = 3,
        "standard triangulated 3-spheres: simplex_boundary_4, cycle_join, cross_polytope_3");

  m.def("validate",
        [](const SimplicialComplex& c) { return json_to_py(report_to_json(validate_triangulation(c))); },
        py::arg("complex"));
  m.def("check_pseudo_manifold", &check_pseudo_manifold, py::arg("complex"));
  m.def("surface_is_sphere",
        [](const SimplicialComplex& s) {
          SurfaceCheck check = surface_is_sphere(s);
          py::dict out;
          out["closed"] = check.closed;
          out["connected"] = check.connected;
          out["euler"] = check.euler;
          out["is_sphere"] = check.is_sphere;
          return out;
        },
        py::arg("surface"));
  m.def("surface_is_orientable", &surface_is_orientable, py::arg("surface"));

  m.def("are_isomorphic",
        [](const SimplicialComplex& a, const SimplicialComplex& b,
           std::size_t size_limit) -> py::object {
          auto phi = are_isomorphic(a, b, size_limit);
          if (!phi) return py::none();
          return py::cast(*phi);
        },
        py::arg("a"), py::arg("b"), py::arg("size_limit") = kDefaultSizeLimit);
  m.def("canonical_key",
        [](const SimplicialComplex& c, std::size_t size_limit) {
          return canonical_form(c, size_limit).key();
        },
        py::arg("complex"), py::arg("size_limit") = kDefaultSizeLimit);
  m.def("relabel",
        [](const SimplicialComplex& c, const VertexMap& phi) { return relabel(c, phi); },
        py::arg("complex"), py::arg("mapping"));

  m.def("intersection_matrix",
        [](const SimplicialComplex& c) {
          IntersectionMatrix matrix = intersection_matrix(c);
          return py::make_tuple(matrix.facet_order, matrix.entries);
        },
        py::arg("complex"), "facet order (label-lexicographic) and the rank matrix");
  m.def("find_maps",
        [](const SimplicialComplex& a, const SimplicialComplex& b, std::size_t limit) {
          std::vector<std::vector<std::pair<int, int>>> out;
          for (const auto& f : find_intersection_preserving_maps(a, b, limit)) {
            out.push_back(map_to_pairs(f, a, b));
          }
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("limit") = 1,
        "intersection-preserving facet bijections as index pairs into the default orders");
  m.def("is_intersection_preserving",
        [](const SimplicialComplex& a, const SimplicialComplex& b,
           const std::vector<std::pair<int, int>>& pairs) {
          return is_intersection_preserving(a, b, pairs_to_map(a, b, pairs));
        },
        py::arg("a"), py::arg("b"), py::arg("pairs"));

  m.def("reconstruct",
        [](const SimplicialComplex& a, const SimplicialComplex& b,
           const std::optional<std::vector<std::pair<int, int>>>& pairs) -> py::object {
          FacetBijection f;
          if (pairs) {
            f = pairs_to_map(a, b, *pairs);
          } else {
            auto maps = find_intersection_preserving_maps(a, b, 1);
            if (maps.empty()) return py::none();
            f = maps.front();
          }
          nlohmann::json j = reconstruction_to_json(reconstruct_isomorphism(a, b, f));
          j["map"] = map_to_json(f, a, b);
          return json_to_py(j);
        },
        py::arg("a"), py::arg("b"), py::arg("pairs") = std::nullopt,
        "run the reconstruction pipeline; searches for the facet bijection when pairs is None");
  m.def("certify",
        [](const SimplicialComplex& a, const SimplicialComplex& b, const VertexMap& phi,
           const std::vector<std::pair<int, int>>& pairs) {
          return certify(a, b, phi, pairs_to_map(a, b, pairs));
        },
        py::arg("a"), py::arg("b"), py::arg("phi"), py::arg("pairs"));

  m.def("detect_shell",
        [](const SimplicialComplex& c) -> py::object {
          auto witness = detect_shell(c);
          if (!witness) return py::none();
          return json_to_py(witness_to_json(*witness));
        },
        py::arg("complex"));
  m.def("lift_2_shell", &lift_2_shell, py::arg("shell"), py::arg("apex"));
  m.def("wheel_shell",
        [](const std::string& kind, int n, int k) {
          return wheel_shell(shell_kind_from_string(kind), n, k);
        },
        py::arg("kind"), py::arg("n"), py::arg("k"));
  m.def("enumerate_shells",
        [](const std::string& kind, int n, int k_max) {
          auto result = shell_kind_from_string(kind) == ShellKind::lineal
                            ? enumerate_lineal_shells(n, k_max)
                            : enumerate_cyclic_shells(n, k_max);
          return json_to_py(enumeration_to_json(result));
        },
        py::arg("kind"), py::arg("n"), py::arg("k_max"));
  m.def("verify_classification",
        [](int n, int k_max) { return json_to_py(classification_to_json(verify_classification(n, k_max))); },
        py::arg("n"), py::arg("k_max"));

  m.def("catalog",
        [](const std::string& name) -> py::object {
          auto c = catalog_lookup(name);
          if (!c) return py::none();
          return py::cast(*c);
        },
        py::arg("name"));
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& entry : shell_catalog()) names.push_back(entry.name);
    return names;
  });
}
