// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/shells.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace trishell {

const char* to_string(ShellKind kind) {
  return kind == ShellKind::lineal ? "lineal" : "cyclic";
}

namespace {

// Pairwise intersection ranks of the facets, by facet index.
std::vector<std::vector<int>> pairwise_ranks(const SimplicialComplex& c) {
  const auto& facets = c.facet_ids();
  const std::size_t k = facets.size();
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    m[i][i] = static_cast<int>(facets[i].size());
    for (std::size_t j = i + 1; j < k; ++j) {
      m[i][j] = m[j][i] = static_cast<int>(intersection_size_ids(facets[i], facets[j]));
    }
  }
  return m;
}

std::vector<Simplex> subsets_of_rank(const Simplex& s, std::size_t r) {
  std::vector<Simplex> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == r) {
      Simplex sub;
      sub.reserve(r);
      for (std::size_t i : pick) sub.push_back(s[i]);
      out.push_back(std::move(sub));
      return;
    }
    for (std::size_t i = start; i + (r - pick.size()) <= s.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

Simplex common_vertices(const std::vector<Simplex>& facets) {
  Simplex core = facets.front();
  for (std::size_t i = 1; i < facets.size(); ++i) {
    core = simplex_intersection(core, facets[i]);
  }
  return core;
}

Simplex simplex_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Does the witness order realize the wheel structure over core X? The facet
// rims must chain through single shared vertices, as a path or a cycle.
bool wheel_over_core(const std::vector<Simplex>& order, const Simplex& core, ShellKind kind) {
  const std::size_t k = order.size();
  std::vector<Simplex> rims;
  rims.reserve(k);
  for (const Simplex& f : order) {
    if (!simplex_subset(core, f)) return false;
    Simplex rim = simplex_difference(f, core);
    if (rim.size() != 2) return false;
    rims.push_back(std::move(rim));
  }
  Simplex first_shared = simplex_intersection(rims[0], rims[1]);
  if (first_shared.size() != 1) return false;
  std::vector<Label> seq;
  seq.push_back(simplex_difference(rims[0], first_shared).front());
  seq.push_back(first_shared.front());
  for (std::size_t i = 1; i < k; ++i) {
    const Label& cur = seq.back();
    if (!std::binary_search(rims[i].begin(), rims[i].end(), cur)) return false;
    Simplex rest = simplex_difference(rims[i], Simplex{cur});
    if (rest.size() != 1) return false;
    seq.push_back(rest.front());
  }
  if (kind == ShellKind::lineal) {
    std::set<Label> distinct(seq.begin(), seq.end());
    return distinct.size() == seq.size();
  }
  if (seq.front() != seq.back()) return false;
  std::set<Label> distinct(seq.begin(), seq.end() - 1);
  return distinct.size() == seq.size() - 1;
}

}  // namespace

std::optional<std::string> identify_shell(const SimplicialComplex& c,
                                          const ShellWitness& witness) {
  const int n = witness.dim;
  const int k = witness.k();

  Simplex core_all = common_vertices(witness.order);
  if (static_cast<int>(core_all.size()) >= n - 1) {
    for (const Simplex& core : subsets_of_rank(core_all, static_cast<std::size_t>(n - 1))) {
      if (wheel_over_core(witness.order, core, witness.kind)) {
        return std::to_string(n) + (witness.kind == ShellKind::lineal ? "LW_" : "CW_") +
               std::to_string(k);
      }
    }
  }

  if (c.vertex_count() <= kDefaultSizeLimit) {
    static const std::map<std::string, std::string> fixture_names = [] {
      std::map<std::string, std::string> names;
      for (const CatalogEntry& entry : shell_catalog()) {
        names[canonical_form(entry.complex).key()] = entry.name;
      }
      return names;
    }();
    auto it = fixture_names.find(canonical_form(c).key());
    if (it != fixture_names.end()) return it->second;
  }
  return std::nullopt;
}

std::optional<ShellWitness> detect_shell(const SimplicialComplex& c) {
  auto rank = c.uniform_rank();
  if (!rank) {
    throw Error(ErrorCode::MixedRank, "shell detection needs facets of equal rank");
  }
  const int r = *rank;
  const std::size_t k = c.facet_count();
  if (r < 3 || k < 2) return std::nullopt;

  const auto m = pairwise_ranks(c);
  std::vector<std::vector<std::size_t>> adjacent(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (m[i][j] == r - 1) {
        adjacent[i].push_back(j);
        adjacent[j].push_back(i);
      } else if (m[i][j] != r - 2) {
        return std::nullopt;  // some pair is off the pattern entirely
      }
    }
  }

  // The pairs at rank r-1 must form a simple path (lineal) or a simple cycle
  // (cyclic) through all facets; every other pair is already at rank r-2.
  std::vector<std::size_t> degree_one;
  for (std::size_t i = 0; i < k; ++i) {
    if (adjacent[i].size() > 2) return std::nullopt;
    if (adjacent[i].size() == 1) degree_one.push_back(i);
    if (adjacent[i].empty()) return std::nullopt;
  }

  ShellWitness witness;
  witness.dim = r - 1;
  std::vector<std::size_t> order;
  std::vector<bool> seen(k, false);
  auto walk = [&](std::size_t start) {
    order.push_back(start);
    seen[start] = true;
    while (true) {
      std::size_t cur = order.back();
      bool advanced = false;
      for (std::size_t next : adjacent[cur]) {
        if (!seen[next]) {
          order.push_back(next);
          seen[next] = true;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  };

  if (degree_one.size() == 2) {
    witness.kind = ShellKind::lineal;
    walk(std::min(degree_one[0], degree_one[1]));
  } else if (degree_one.empty() && k >= 3) {
    witness.kind = ShellKind::cyclic;
    walk(0);
    // walk must close up: last and first facet adjacent
    if (m[order.back()][order.front()] != r - 1) return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (order.size() != k) return std::nullopt;  // disconnected adjacency

  witness.order.reserve(k);
  for (std::size_t i : order) witness.order.push_back(c.facet(i));
  witness.catalog_id = identify_shell(c, witness);
  return witness;
}

std::optional<Simplex> cyclic_wheel_core(const std::vector<Simplex>& star_facets) {
  if (star_facets.size() < 3) return std::nullopt;
  SimplicialComplex spanned = SimplicialComplex::from_facets(star_facets);
  if (spanned.facet_count() != star_facets.size()) return std::nullopt;
  std::optional<ShellWitness> witness;
  try {
    witness = detect_shell(spanned);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!witness || witness->kind != ShellKind::cyclic) return std::nullopt;
  const int n = witness->dim;
  Simplex core_all = common_vertices(witness->order);
  for (const Simplex& core : subsets_of_rank(core_all, static_cast<std::size_t>(n - 1))) {
    if (wheel_over_core(witness->order, core, ShellKind::cyclic)) return core;
  }
  return std::nullopt;
}

SimplicialComplex wheel_shell(ShellKind kind, int n, int k) {
  if (n < 2) {
    throw Error(ErrorCode::BadParameter, "wheel shells need dimension n >= 2");
  }
  if (kind == ShellKind::lineal ? k < 2 : k < 3) {
    throw Error(ErrorCode::BadParameter, "too few facets for a " +
                                             std::string(to_string(kind)) + " wheel");
  }
  const int rim = kind == ShellKind::lineal ? k + 1 : k;
  Simplex core;
  for (int i = 0; i < n - 1; ++i) core.push_back(std::to_string(rim + i));
  std::vector<Simplex> facets;
  facets.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Simplex f = core;
    f.push_back(std::to_string(i));
    f.push_back(std::to_string((i + 1) % rim));
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex lift_2_shell(const SimplicialComplex& s, const Label& apex_label) {
  std::optional<ShellWitness> witness;
  try {
    witness = detect_shell(s);
  } catch (const Error&) {
    witness = std::nullopt;
  }
  if (!witness || witness->dim != 2) {
    throw Error(ErrorCode::NotAShell, "lifting needs a 2-dimensional shell");
  }
  if (!is_valid_label(apex_label)) {
    throw Error(ErrorCode::BadLabel, "malformed apex label '" + apex_label + "'");
  }
  if (s.has_vertex(apex_label)) {
    throw Error(ErrorCode::LabelClash, "apex '" + apex_label + "' is already a vertex");
  }
  std::vector<Simplex> lifted;
  lifted.reserve(s.facet_count());
  for (Simplex f : s.facets()) {
    f.push_back(apex_label);
    lifted.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(lifted);
}

SimplicialComplex shell_shadow(const SimplicialComplex& c, const Label& apex_label) {
  int id = c.vertex_id(apex_label);
  if (id < 0) {
    throw Error(ErrorCode::VertexNotFound, "apex '" + apex_label + "' not in complex");
  }
  std::vector<Simplex> reduced;
  for (const Simplex& f : c.facets()) {
    if (!std::binary_search(f.begin(), f.end(), apex_label)) {
      throw Error(ErrorCode::BadParameter, "apex is not contained in every facet");
    }
    reduced.push_back(simplex_difference(f, Simplex{apex_label}));
  }
  return SimplicialComplex::from_facets(reduced);
}

const std::vector<SimplicialComplex>* EnumerationResult::classes_for(int k) const {
  for (const auto& [kk, classes] : classes_by_k) {
    if (kk == k) return &classes;
  }
  return nullptr;
}

namespace {

// canonical key -> canonical representative
using ClassMap = std::map<std::string, SimplicialComplex>;

void insert_class(ClassMap& classes, const SimplicialComplex& candidate) {
  CanonicalForm form = canonical_form(candidate);
  std::string key = form.key();
  if (!classes.count(key)) classes.emplace(std::move(key), form.to_complex());
}

ShellWitness witness_or_fail(const SimplicialComplex& c, ShellKind expected) {
  auto witness = detect_shell(c);
  if (!witness || witness->kind != expected) {
    throw std::logic_error("enumerated representative lost its shell pattern");
  }
  return *witness;
}

void check_enumeration_params(int n, int k_min, int k_max) {
  if (n != 2 && n != 3) {
    throw Error(ErrorCode::BadParameter, "shell enumeration is implemented for n in {2, 3}");
  }
  if (k_max < k_min || k_max > kMaxEnumerationFacets) {
    throw Error(ErrorCode::BadParameter,
                "k_max must lie in [" + std::to_string(k_min) + ", " +
                    std::to_string(kMaxEnumerationFacets) + "]");
  }
}

// All ways to glue one more facet onto an end of a lineal shell: a rank-n
// subset of the end facet plus one vertex that is fresh or reused, kept when
// every non-neighbour pair lands at rank n-1.
void extend_lineal(const SimplicialComplex& rep, const std::vector<Simplex>& order, int n,
                   ClassMap& out) {
  const Simplex& last = order.back();
  std::vector<Label> alphas;
  alphas.push_back(std::to_string(rep.vertex_count()));  // fresh: reps use labels 0..m-1
  for (const Label& v : rep.vertex_labels()) {
    if (!std::binary_search(last.begin(), last.end(), v)) alphas.push_back(v);
  }
  for (const Simplex& base : subsets_of_rank(last, static_cast<std::size_t>(n))) {
    for (const Label& alpha : alphas) {
      Simplex candidate = base;
      candidate.push_back(alpha);
      std::sort(candidate.begin(), candidate.end());
      bool ok = true;
      for (std::size_t i = 0; i + 1 < order.size() && ok; ++i) {
        ok = simplex_intersection_size(candidate, order[i]) == static_cast<std::size_t>(n - 1);
      }
      if (!ok) continue;
      std::vector<Simplex> facets = rep.facets();
      facets.push_back(candidate);
      insert_class(out, SimplicialComplex::from_facets(facets));
    }
  }
}

std::vector<ClassMap> enumerate_lineal_impl(int n, int k_max) {
  std::vector<ClassMap> by_k(static_cast<std::size_t>(k_max) + 1);
  insert_class(by_k[2], wheel_shell(ShellKind::lineal, n, 2));
  for (int k = 3; k <= k_max; ++k) {
    for (const auto& [key, rep] : by_k[static_cast<std::size_t>(k - 1)]) {
      ShellWitness witness = witness_or_fail(rep, ShellKind::lineal);
      std::vector<Simplex> reversed(witness.order.rbegin(), witness.order.rend());
      extend_lineal(rep, witness.order, n, by_k[static_cast<std::size_t>(k)]);
      extend_lineal(rep, reversed, n, by_k[static_cast<std::size_t>(k)]);
    }
  }
  return by_k;
}

std::vector<ClassMap> enumerate_cyclic_impl(int n, int k_max) {
  std::vector<ClassMap> by_k(static_cast<std::size_t>(k_max) + 1);
  // Three facets pairwise at rank n with three distinct shared faces: the
  // triangle wheel. (Three facets around a common rank-n face fit the raw
  // rank pattern but never occur as an edge star; they are excluded here.)
  insert_class(by_k[3], wheel_shell(ShellKind::cyclic, n, 3));

  std::vector<ClassMap> lineal = enumerate_lineal_impl(n, k_max - 1);
  for (int k = 4; k <= k_max; ++k) {
    for (const auto& [key, rep] : lineal[static_cast<std::size_t>(k - 1)]) {
      ShellWitness witness = witness_or_fail(rep, ShellKind::lineal);
      const std::vector<Simplex>& order = witness.order;
      const Simplex& first = order.front();
      const Simplex& last = order.back();
      // The closing facet must contain all of first ∩ last plus one private
      // vertex of each end.
      Simplex shared = simplex_intersection(first, last);
      for (const Label& x : simplex_difference(first, last)) {
        for (const Label& y : simplex_difference(last, first)) {
          Simplex candidate = shared;
          candidate.push_back(x);
          candidate.push_back(y);
          std::sort(candidate.begin(), candidate.end());
          bool ok = simplex_intersection_size(candidate, first) == static_cast<std::size_t>(n) &&
                    simplex_intersection_size(candidate, last) == static_cast<std::size_t>(n);
          for (std::size_t i = 1; i + 1 < order.size() && ok; ++i) {
            ok = simplex_intersection_size(candidate, order[i]) ==
                 static_cast<std::size_t>(n - 1);
          }
          if (!ok) continue;
          std::vector<Simplex> facets = rep.facets();
          facets.push_back(candidate);
          insert_class(by_k[static_cast<std::size_t>(k)],
                       SimplicialComplex::from_facets(facets));
        }
      }
    }
  }
  return by_k;
}

EnumerationResult pack_result(int n, ShellKind kind, int k_min,
                              const std::vector<ClassMap>& by_k) {
  EnumerationResult result;
  result.n = n;
  result.kind = kind;
  for (int k = k_min; k < static_cast<int>(by_k.size()); ++k) {
    std::vector<SimplicialComplex> classes;
    classes.reserve(by_k[static_cast<std::size_t>(k)].size());
    for (const auto& [key, rep] : by_k[static_cast<std::size_t>(k)]) classes.push_back(rep);
    result.classes_by_k.emplace_back(k, std::move(classes));
  }
  return result;
}

}  // namespace

EnumerationResult enumerate_lineal_shells(int n, int k_max) {
  check_enumeration_params(n, 2, k_max);
  return pack_result(n, ShellKind::lineal, 2, enumerate_lineal_impl(n, k_max));
}

EnumerationResult enumerate_cyclic_shells(int n, int k_max) {
  check_enumeration_params(n, 3, k_max);
  return pack_result(n, ShellKind::cyclic, 3, enumerate_cyclic_impl(n, k_max));
}

ClassificationReport verify_classification(int n, int k_max) {
  check_enumeration_params(n, 3, k_max);
  ClassificationReport report;
  report.n = n;
  report.k_max = k_max;

  auto collect = [&](const EnumerationResult& enumerated, std::vector<ClassificationEntry>& out) {
    std::set<std::string> seen_keys;
    for (const auto& [k, classes] : enumerated.classes_by_k) {
      for (const SimplicialComplex& rep : classes) {
        ClassificationEntry entry;
        entry.k = k;
        entry.canonical_key = canonical_form(rep).key();
        ShellWitness witness = witness_or_fail(rep, enumerated.kind);
        entry.name = witness.catalog_id;
        if (!entry.name) report.unnamed_keys.push_back(entry.canonical_key);
        seen_keys.insert(entry.canonical_key);
        out.push_back(std::move(entry));
      }
    }
    // Every fixture of this dimension and kind within reach must show up.
    for (const CatalogEntry& fixture : shell_catalog()) {
      auto witness = detect_shell(fixture.complex);
      if (!witness || witness->dim != n || witness->kind != enumerated.kind) continue;
      if (static_cast<int>(fixture.complex.facet_count()) > k_max) continue;
      if (!seen_keys.count(canonical_form(fixture.complex).key())) {
        report.missing_catalog.push_back(fixture.name);
      }
    }
  };

  collect(enumerate_lineal_shells(n, k_max), report.lineal);
  collect(enumerate_cyclic_shells(n, k_max), report.cyclic);
  report.ok = report.unnamed_keys.empty() && report.missing_catalog.empty();
  return report;
}

}  // namespace trishell
