// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface. Exit codes: 0 success / positive verdict, 1 negative
// result, 2 usage errors, 3 parse errors. Diagnostics go to stderr; JSON
// output is byte-stable (sorted keys, no timestamps).
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trishell/generators.hpp"
#include "trishell/io.hpp"
#include "trishell/isomorphism.hpp"
#include "trishell/reconstruct.hpp"
#include "trishell/shells.hpp"
#include "trishell/validate.hpp"

namespace {

using namespace trishell;
using nlohmann::json;

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_labels(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i];
  }
  return out;
}

int run_validate(const std::string& path, const std::string& format) {
  NamedComplex input = load_complex(path);
  ValidationReport report = validate_triangulation(input.complex);
  if (format == "json") {
    print_json(report_to_json(report));
  } else {
    auto yes_no = [](bool b) { return b ? "ok" : "FAIL"; };
    std::cout << "dimension:       " << yes_no(report.dimension_ok) << " (" << report.dimension
              << ")\n";
    if (report.dimension_ok) {
      std::cout << "pseudo-manifold: " << yes_no(report.is_pseudo_manifold);
      if (!report.is_pseudo_manifold) {
        std::cout << " (" << report.bad_triangles.size() << " triangles off degree 2)";
      }
      std::cout << "\n";
      std::cout << "vertex links:    " << yes_no(report.all_links_spheres);
      if (!report.all_links_spheres) {
        std::cout << " (non-sphere link at:";
        for (const auto& r : report.vertex_link_results) {
          if (!r.link.is_sphere) std::cout << ' ' << r.vertex;
        }
        std::cout << ")";
      }
      std::cout << "\n";
      std::cout << "edge stars:      " << yes_no(report.all_edges_cyclic);
      if (!report.all_edges_cyclic) {
        std::cout << " (no cyclic order around:";
        for (const auto& r : report.edge_link_results) {
          if (!r.cyclic) std::cout << " {" << join_labels(r.edge) << "}";
        }
        std::cout << ")";
      }
      std::cout << "\n";
    }
    std::cout << "verdict:         " << (report.verdict ? "valid triangulation" : "invalid")
              << "\n";
  }
  return report.verdict ? 0 : kExitNegative;
}

int run_matrix(const std::string& path, const std::string& format) {
  NamedComplex input = load_complex(path);
  IntersectionMatrix m = intersection_matrix(input.complex);
  if (format == "json") {
    print_json(matrix_to_json(m));
  } else if (format == "csv") {
    std::cout << matrix_to_csv(m);
  } else {
    for (std::size_t i = 0; i < m.facet_order.size(); ++i) {
      std::cout << i << ": {" << join_labels(m.facet_order[i]) << "}\n";
    }
    for (const auto& row : m.entries) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) std::cout << ' ';
        std::cout << row[j];
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_match(const std::string& path_a, const std::string& path_b, std::size_t limit,
              bool all, const std::string& format) {
  NamedComplex a = load_complex(path_a);
  NamedComplex b = load_complex(path_b);
  auto maps = find_intersection_preserving_maps(a.complex, b.complex,
                                                all ? static_cast<std::size_t>(-1) : limit);
  if (format == "json") {
    json out = json::array();
    for (const auto& m : maps) out.push_back(map_to_json(m, a.complex, b.complex));
    print_json(out);
  } else if (maps.empty()) {
    std::cout << "none\n";
  } else {
    for (std::size_t i = 0; i < maps.size(); ++i) {
      std::cout << "map " << i << ":";
      for (std::size_t s = 0; s < maps[i].assignment.size(); ++s) {
        std::cout << ' ' << s << "->" << maps[i].assignment[s];
      }
      std::cout << "\n";
    }
  }
  return maps.empty() ? kExitNegative : 0;
}

int run_reconstruct(const std::string& path_a, const std::string& path_b,
                    const std::string& map_path, bool search, const std::string& format) {
  NamedComplex a = load_complex(path_a);
  NamedComplex b = load_complex(path_b);
  FacetBijection f;
  if (search) {
    auto maps = find_intersection_preserving_maps(a.complex, b.complex, 1);
    if (maps.empty()) {
      std::cerr << "no intersection-preserving facet bijection exists\n";
      return kExitNegative;
    }
    f = maps.front();
  } else {
    f = verify_map(a.complex, b.complex, load_map(map_path, a.complex, b.complex));
  }
  ReconstructionReport report = reconstruct_isomorphism(a.complex, b.complex, f);
  if (format == "json") {
    json j = reconstruction_to_json(report);
    j["map"] = map_to_json(f, a.complex, b.complex);
    print_json(j);
  } else {
    auto yes_no = [](bool ok) { return ok ? "ok" : "FAIL"; };
    std::cout << "validation:      a " << yes_no(report.validation_a.verdict) << ", b "
              << yes_no(report.validation_b.verdict) << "\n";
    std::cout << "facet map:       "
              << (report.map_intersection_preserving ? "intersection preserving"
                                                     : "NOT intersection preserving")
              << "\n";
    std::cout << "rank bijections: 4 " << yes_no(report.rank_bijection_ok.rank4) << ", 3 "
              << yes_no(report.rank_bijection_ok.rank3) << ", 2 "
              << yes_no(report.rank_bijection_ok.rank2) << "\n";
    std::cout << "singletons:      " << yes_no(report.all_singletons) << "\n";
    if (report.phi) {
      std::cout << "phi:\n";
      for (const auto& [from, to] : *report.phi) {
        std::cout << "  " << from << "  ->  " << to << "\n";
      }
    }
    std::cout << "certificate:     " << (report.phi_verified ? "verified" : "absent") << "\n";
    if (report.failure_stage) {
      std::cout << "failure stage:   " << to_string(*report.failure_stage);
      if (report.offending_vertex) std::cout << " (vertex " << *report.offending_vertex << ")";
      std::cout << "\n";
    }
  }
  return report.phi_verified ? 0 : kExitNegative;
}

int run_classify(const std::string& path, const std::string& format) {
  NamedComplex input = load_complex(path);
  std::optional<ShellWitness> witness;
  try {
    witness = detect_shell(input.complex);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MixedRank) throw;
    witness = std::nullopt;
  }
  if (!witness) {
    if (format == "json") {
      print_json(json(nullptr));
    } else {
      std::cout << "not a shell\n";
    }
    return kExitNegative;
  }
  if (format == "json") {
    print_json(witness_to_json(*witness));
  } else {
    std::cout << to_string(witness->kind) << " shell, dim " << witness->dim << ", " << witness->k()
              << " facets";
    if (witness->catalog_id) std::cout << " = " << *witness->catalog_id;
    std::cout << "\norder:\n";
    for (const Simplex& f : witness->order) std::cout << "  {" << join_labels(f) << "}\n";
  }
  return 0;
}

int run_enumerate(int dim, const std::string& kind, int max_facets, bool verify,
                  const std::string& format) {
  if (verify) {
    ClassificationReport report = verify_classification(dim, max_facets);
    if (format == "json") {
      print_json(classification_to_json(report));
    } else {
      auto print_entries = [](const char* title, const std::vector<ClassificationEntry>& list) {
        std::cout << title << ":\n";
        for (const auto& e : list) {
          std::cout << "  k=" << e.k << "  " << (e.name ? *e.name : "<unnamed>") << "\n";
        }
      };
      print_entries("lineal", report.lineal);
      print_entries("cyclic", report.cyclic);
      std::cout << "ok: " << (report.ok ? "yes" : "no") << "\n";
    }
    return report.ok ? 0 : kExitNegative;
  }
  EnumerationResult result = kind == "lineal" ? enumerate_lineal_shells(dim, max_facets)
                                              : enumerate_cyclic_shells(dim, max_facets);
  if (format == "json") {
    print_json(enumeration_to_json(result));
  } else {
    for (const auto& [k, classes] : result.classes_by_k) {
      std::cout << "k=" << k << ": " << classes.size() << " class(es)";
      std::string names;
      for (const SimplicialComplex& rep : classes) {
        auto witness = detect_shell(rep);
        names += ' ';
        names += witness && witness->catalog_id ? *witness->catalog_id : "<unnamed>";
      }
      std::cout << names << "\n";
    }
  }
  return 0;
}

int run_catalog(const std::string& name, bool list, const std::string& format) {
  if (list) {
    for (const CatalogEntry& entry : shell_catalog()) {
      std::cout << entry.name << "  (" << entry.source << ")\n";
    }
    std::cout << "plus the parametric wheels <n>LW_<k> and <n>CW_<k>\n";
    return 0;
  }
  auto complex = catalog_lookup(name);
  if (!complex) {
    std::cerr << "unknown catalog name '" << name << "'\n";
    return kExitUsage;
  }
  if (format == "json") {
    print_json(complex_to_json(*complex, name));
  } else {
    std::cout << to_facet_text(*complex, name);
  }
  return 0;
}

int run_gen(const std::string& construction, int p, int q, const std::string& format) {
  StandardKind kind;
  if (construction == "simplex_boundary_4") {
    kind = StandardKind::simplex_boundary_4;
  } else if (construction == "cycle_join") {
    kind = StandardKind::cycle_join;
  } else if (construction == "cross_polytope_3") {
    kind = StandardKind::cross_polytope_3;
  } else {
    std::cerr << "unknown construction '" << construction << "'\n";
    return kExitUsage;
  }
  SimplicialComplex c = generate_standard(kind, p, q);
  std::string name = construction;
  if (kind == StandardKind::cycle_join) {
    name += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  if (format == "json") {
    print_json(complex_to_json(c, name));
  } else {
    std::cout << to_facet_text(c, name);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial triangulations of closed 3-manifolds: validation, intersection\n"
               "matrices, isomorphism reconstruction from facet bijections, and exhaustive\n"
               "shell classification"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string path_a, path_b, map_path, kind, name, construction;
  std::size_t limit = 1;
  bool all = false, search = false, verify = false, list = false;
  int dim = 3, max_facets = kMaxEnumerationFacets, p = 3, q = 3;

  auto* validate_cmd = app.add_subcommand("validate", "check a closed-3-manifold triangulation");
  validate_cmd->add_option("file", path_a, "complex file (facet list or JSON)")->required();
  validate_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* matrix_cmd = app.add_subcommand("matrix", "intersection matrix of a complex");
  matrix_cmd->add_option("file", path_a)->required();
  matrix_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* match_cmd = app.add_subcommand("match", "find intersection-preserving facet bijections");
  match_cmd->add_option("source", path_a)->required();
  match_cmd->add_option("target", path_b)->required();
  match_cmd->add_option("--limit", limit, "maximum number of maps")->check(CLI::PositiveNumber);
  match_cmd->add_flag("--all", all, "report every map");
  match_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "extend a facet bijection to a vertex isomorphism");
  reconstruct_cmd->add_option("source", path_a)->required();
  reconstruct_cmd->add_option("target", path_b)->required();
  auto* map_opt = reconstruct_cmd->add_option("--map", map_path, "facet map file (JSON pairs)");
  auto* search_opt =
      reconstruct_cmd->add_flag("--search", search, "search for the facet bijection first");
  map_opt->excludes(search_opt);
  reconstruct_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "detect the shell pattern of a complex");
  classify_cmd->add_option("file", path_a)->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "classify shells exhaustively up to isomorphism");
  enumerate_cmd->add_option("--dim", dim, "shell dimension (2 or 3)")->required();
  auto* kind_opt =
      enumerate_cmd->add_option("--kind", kind)->check(CLI::IsMember({"lineal", "cyclic"}));
  enumerate_cmd->add_option("--max-facets", max_facets)->required();
  enumerate_cmd->add_flag("--verify", verify, "pair every class with its catalog name");
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* catalog_cmd = app.add_subcommand("catalog", "emit a named shell fixture");
  catalog_cmd->add_option("name", name);
  catalog_cmd->add_flag("--list", list, "list the fixed fixture names");
  catalog_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gen_cmd = app.add_subcommand("gen", "generate a standard triangulated 3-sphere");
  gen_cmd->add_option("--construction", construction,
                      "simplex_boundary_4 | cycle_join | cross_polytope_3")
      ->required();
  gen_cmd->add_option("--p", p, "first cycle length (cycle_join)");
  gen_cmd->add_option("--q", q, "second cycle length (cycle_join)");
  gen_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(path_a, format);
    if (app.got_subcommand(matrix_cmd)) return run_matrix(path_a, format);
    if (app.got_subcommand(match_cmd)) return run_match(path_a, path_b, limit, all, format);
    if (app.got_subcommand(reconstruct_cmd)) {
      if (!search && map_path.empty()) {
        std::cerr << "reconstruct needs --map FILE or --search\n";
        return kExitUsage;
      }
      return run_reconstruct(path_a, path_b, map_path, search, format);
    }
    if (app.got_subcommand(classify_cmd)) return run_classify(path_a, format);
    if (app.got_subcommand(enumerate_cmd)) {
      if (!verify && kind_opt->count() == 0) {
        std::cerr << "enumerate needs --kind lineal|cyclic (or --verify)\n";
        return kExitUsage;
      }
      return run_enumerate(dim, kind, max_facets, verify, format);
    }
    if (app.got_subcommand(catalog_cmd)) {
      if (!list && name.empty()) {
        std::cerr << "catalog needs a name or --list\n";
        return kExitUsage;
      }
      return run_catalog(name, list, format);
    }
    if (app.got_subcommand(gen_cmd)) return run_gen(construction, p, q, format);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::EmptyInput:
      case ErrorCode::BadLabel:
        return kExitParse;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}
