// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
//
// Fixture shells. The exceptional lineal and cyclic shells are pinned here
// by their standard presentations; the parametric wheel families are
// generated on demand by wheel_shell.
#include <cctype>

#include "trishell/shells.hpp"

namespace trishell {

namespace {

SimplicialComplex make(std::vector<Simplex> facets) {
  return SimplicialComplex::from_facets(facets);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  // --- exceptional 2-shells ---------------------------------------------
  const std::vector<Simplex> le4 = {
      {"v", "a", "b"}, {"a", "b", "bp"}, {"ap", "b", "bp"}, {"v", "ap", "bp"}};
  std::vector<Simplex> le5 = le4;
  le5.push_back({"bp", "v", "c"});
  std::vector<Simplex> le6 = le5;
  le6.push_back({"v", "d", "b"});

  entries.push_back({"LE_4", make(le4), "exceptional lineal 2-shell"});
  entries.push_back({"LE_5", make(le5), "extension of LE_4"});
  entries.push_back({"LE_6", make(le6), "extension of LE_5"});

  std::vector<Simplex> ce5 = le4;
  ce5.push_back({"v", "a", "ap"});
  std::vector<Simplex> ce6 = le5;
  ce6.push_back({"v", "b", "c"});
  entries.push_back({"CE_5", make(ce5), "closure of LE_4"});
  entries.push_back({"CE_6", make(ce6), "closure of LE_5"});

  // --- exceptional 3-lineal shells --------------------------------------
  entries.push_back({"3LE_4",
                     make({{"v0", "v1", "t", "b"},
                           {"v1", "v2", "t", "b"},
                           {"v2", "v3", "t", "b"},
                           {"v0", "v2", "v3", "t"}}),
                     "exceptional extension of 3LW_3; lift of LE_4"});
  entries.push_back({"3LE_5",
                     make({{"v", "a", "b", "z"},
                           {"a", "b", "bp", "z"},
                           {"b", "bp", "ap", "z"},
                           {"bp", "ap", "v", "z"},
                           {"bp", "v", "c", "z"}}),
                     "lift of LE_5"});
  entries.push_back({"3LE_6",
                     make({{"d", "v", "b", "z"},
                           {"v", "b", "a", "z"},
                           {"a", "b", "bp", "z"},
                           {"b", "bp", "ap", "z"},
                           {"bp", "ap", "v", "z"},
                           {"bp", "v", "c", "z"}}),
                     "lift of LE_6"});

  const std::vector<Simplex> ls5 = {{"v0", "v1", "v3", "t"},
                                    {"v0", "v1", "t", "b"},
                                    {"v1", "v2", "t", "b"},
                                    {"v2", "v3", "t", "b"},
                                    {"v0", "v2", "v3", "b"}};
  entries.push_back({"LS_5", make(ls5), "exceptional extension of 3LE_4"});

  const std::vector<Simplex> lf6 = {{"a0", "a1", "a2", "a6"}, {"a0", "a1", "a2", "a4"},
                                    {"a2", "a3", "a4", "a0"}, {"a2", "a3", "a4", "a6"},
                                    {"a4", "a5", "a6", "a2"}, {"a4", "a5", "a6", "a0"}};
  entries.push_back({"LF_6", make(lf6), "exceptional extension of 3LE_5"});

  std::vector<Simplex> lf7 = lf6;
  lf7.push_back({"a4", "a6", "a0", "a7"});
  entries.push_back({"LF_7", make(lf7), "extension of LF_6 (equivalently of 3LE_6)"});

  std::vector<Simplex> lf8 = lf7;
  lf8.push_back({"a2", "a0", "a6", "am1"});
  entries.push_back({"LF_8", make(lf8), "front extension of LF_7"});

  // --- exceptional 3-cyclic shells ---------------------------------------
  std::vector<Simplex> cs6 = ls5;
  cs6.push_back({"v0", "v3", "v1", "v2"});
  entries.push_back({"CS_6", make(cs6), "closure of LS_5"});

  std::vector<Simplex> cf8 = lf7;
  cf8.push_back({"a0", "a6", "a2", "a7"});
  entries.push_back({"CF_8", make(cf8), "closure of LF_7"});

  auto lift_all = [](const std::vector<Simplex>& facets) {
    std::vector<Simplex> lifted;
    lifted.reserve(facets.size());
    for (Simplex f : facets) {
      f.push_back("z");
      lifted.push_back(f);
    }
    return lifted;
  };
  entries.push_back({"3CE_5", make(lift_all(ce5)), "lift of CE_5"});
  entries.push_back({"3CE_6", make(lift_all(ce6)), "lift of CE_6"});

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& shell_catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::pair<SimplicialComplex, VertexMap> lf7_alternative_presentation() {
  // LF_7 built the other way: onto 3LE_6 instead of onto LF_6.
  SimplicialComplex alt = make({{"d", "v", "b", "z"},
                                {"v", "b", "a", "z"},
                                {"a", "b", "bp", "z"},
                                {"b", "bp", "ap", "z"},
                                {"bp", "ap", "v", "z"},
                                {"bp", "v", "c", "z"},
                                {"bp", "v", "c", "b"}});
  VertexMap onto_alt = {{"a0", "v"}, {"a1", "c"},  {"a2", "bp"}, {"a3", "ap"},
                        {"a4", "z"}, {"a5", "a"},  {"a6", "b"},  {"a7", "d"}};
  return {alt, onto_alt};
}

std::optional<SimplicialComplex> catalog_lookup(const std::string& name) {
  for (const CatalogEntry& entry : shell_catalog()) {
    if (entry.name == name) return entry.complex;
  }
  // Parametric wheels: <n>LW_<k> and <n>CW_<k>.
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char ch : s) {
      if (!std::isdigit(ch)) return false;
    }
    return true;
  };
  for (ShellKind kind : {ShellKind::lineal, ShellKind::cyclic}) {
    const std::string tag = kind == ShellKind::lineal ? "LW_" : "CW_";
    auto pos = name.find(tag);
    if (pos == std::string::npos) continue;
    const std::string n_str = name.substr(0, pos);
    const std::string k_str = name.substr(pos + tag.size());
    if (!all_digits(n_str) || !all_digits(k_str)) continue;
    try {
      return wheel_shell(kind, std::stoi(n_str), std::stoi(k_str));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace trishell
