// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace trishell {

namespace {

// (degree, sorted ranks of the facets containing the vertex)
using VertexProfile = std::pair<int, std::vector<int>>;

std::vector<VertexProfile> vertex_profiles(const SimplicialComplex& c) {
  std::vector<VertexProfile> profiles(c.vertex_count());
  for (const auto& f : c.facet_ids()) {
    for (int v : f) {
      profiles[static_cast<std::size_t>(v)].first++;
      profiles[static_cast<std::size_t>(v)].second.push_back(static_cast<int>(f.size()));
    }
  }
  for (auto& p : profiles) std::sort(p.second.begin(), p.second.end());
  return profiles;
}

// pair_counts[i][j] = number of facets containing both vertices.
std::vector<std::vector<int>> pair_counts(const SimplicialComplex& c) {
  const std::size_t n = c.vertex_count();
  std::vector<std::vector<int>> counts(n, std::vector<int>(n, 0));
  for (const auto& f : c.facet_ids()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i; j < f.size(); ++j) {
        counts[static_cast<std::size_t>(f[i])][static_cast<std::size_t>(f[j])]++;
        if (i != j) counts[static_cast<std::size_t>(f[j])][static_cast<std::size_t>(f[i])]++;
      }
    }
  }
  return counts;
}

}  // namespace

std::optional<VertexMap> are_isomorphic(const SimplicialComplex& a,
                                        const SimplicialComplex& b,
                                        std::size_t size_limit) {
  if (a.vertex_count() > size_limit || b.vertex_count() > size_limit) {
    throw Error(ErrorCode::SizeLimit,
                "isomorphism search limited to " + std::to_string(size_limit) + " vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count()) {
    return std::nullopt;
  }

  const auto prof_a = vertex_profiles(a);
  const auto prof_b = vertex_profiles(b);
  {
    auto sorted_a = prof_a;
    auto sorted_b = prof_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
  }

  const auto pairs_a = pair_counts(a);
  const auto pairs_b = pair_counts(b);
  const std::size_t n = a.vertex_count();

  std::set<std::vector<int>> b_facets(b.facet_ids().begin(), b.facet_ids().end());

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  // Source vertices are scanned in label order and candidates tried in label
  // order, so the first complete assignment is the lexicographically first.
  std::function<bool(std::size_t)> assign = [&](std::size_t s) -> bool {
    if (s == n) {
      for (const auto& f : a.facet_ids()) {
        std::vector<int> mapped;
        mapped.reserve(f.size());
        for (int v : f) mapped.push_back(image[static_cast<std::size_t>(v)]);
        std::sort(mapped.begin(), mapped.end());
        if (!b_facets.count(mapped)) return false;
      }
      return true;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || prof_a[s] != prof_b[t]) continue;
      bool consistent = true;
      for (std::size_t s2 = 0; s2 < s && consistent; ++s2) {
        if (pairs_a[s][s2] != pairs_b[t][static_cast<std::size_t>(image[s2])]) {
          consistent = false;
        }
      }
      if (!consistent) continue;
      image[s] = static_cast<int>(t);
      used[t] = true;
      if (assign(s + 1)) return true;
      image[s] = -1;
      used[t] = false;
    }
    return false;
  };

  if (!assign(0)) return std::nullopt;

  VertexMap phi;
  for (std::size_t s = 0; s < n; ++s) {
    phi[a.vertex_labels()[s]] = b.vertex_labels()[static_cast<std::size_t>(image[s])];
  }
  return phi;
}

bool is_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                    const VertexMap& phi) {
  if (phi.size() != a.vertex_count() || a.vertex_count() != b.vertex_count()) return false;
  if (a.facet_count() != b.facet_count()) return false;
  std::set<Label> targets;
  for (const auto& [from, to] : phi) {
    if (!a.has_vertex(from) || !b.has_vertex(to)) return false;
    targets.insert(to);
  }
  if (targets.size() != b.vertex_count()) return false;

  std::set<std::vector<int>> b_facets(b.facet_ids().begin(), b.facet_ids().end());
  for (const auto& f : a.facets()) {
    std::vector<int> mapped;
    mapped.reserve(f.size());
    for (const Label& v : f) mapped.push_back(b.vertex_id(phi.at(v)));
    std::sort(mapped.begin(), mapped.end());
    if (!b_facets.count(mapped)) return false;
  }
  return true;
}

SimplicialComplex relabel(const SimplicialComplex& c, const VertexMap& phi) {
  std::set<Label> targets;
  for (const Label& v : c.vertex_labels()) {
    auto it = phi.find(v);
    if (it == phi.end()) {
      throw Error(ErrorCode::BadParameter, "relabeling misses vertex '" + v + "'");
    }
    targets.insert(it->second);
  }
  if (targets.size() != c.vertex_count()) {
    throw Error(ErrorCode::BadParameter, "relabeling is not injective");
  }
  std::vector<Simplex> mapped;
  mapped.reserve(c.facet_count());
  for (const auto& f : c.facets()) {
    Simplex g;
    g.reserve(f.size());
    for (const Label& v : f) g.push_back(phi.at(v));
    std::sort(g.begin(), g.end());
    mapped.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(mapped);
}

std::string CanonicalForm::key() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < facets[i].size(); ++j) {
      if (j) out << ',';
      out << facets[i][j];
    }
  }
  return out.str();
}

SimplicialComplex CanonicalForm::to_complex() const {
  std::vector<Simplex> lists;
  lists.reserve(facets.size());
  for (const auto& f : facets) {
    Simplex s;
    s.reserve(f.size());
    for (int v : f) s.push_back(std::to_string(v));
    std::sort(s.begin(), s.end());
    lists.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(lists);
}

namespace {

// Ordered partition of vertex ids into cells. Cells are repeatedly split by
// a label-independent signature (initially vertex degrees, then the profile
// of cell indices seen across incident facets), so the cell order is itself
// an isomorphism invariant.
struct Refiner {
  const std::vector<std::vector<int>>& facets;
  std::size_t n;

  explicit Refiner(const SimplicialComplex& c) : facets(c.facet_ids()), n(c.vertex_count()) {}

  using Cells = std::vector<std::vector<int>>;

  void refine(Cells& cells) const {
    std::vector<int> cell_of(n, 0);
    while (true) {
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        for (int v : cells[ci]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(ci);
      }
      // signature of v: sorted list of incident-facet cell profiles
      std::vector<std::vector<std::vector<int>>> sig(n);
      for (const auto& f : facets) {
        std::vector<int> profile;
        profile.reserve(f.size());
        for (int v : f) profile.push_back(cell_of[static_cast<std::size_t>(v)]);
        std::sort(profile.begin(), profile.end());
        for (int v : f) sig[static_cast<std::size_t>(v)].push_back(profile);
      }
      for (auto& s : sig) std::sort(s.begin(), s.end());

      Cells next;
      bool split = false;
      for (const auto& cell : cells) {
        std::map<std::vector<std::vector<int>>, std::vector<int>> groups;
        for (int v : cell) groups[sig[static_cast<std::size_t>(v)]].push_back(v);
        if (groups.size() > 1) split = true;
        for (auto& [key, members] : groups) next.push_back(members);
      }
      cells = std::move(next);
      if (!split) return;
    }
  }
};

std::vector<std::vector<int>> encode_with_order(const std::vector<std::vector<int>>& facets,
                                                const std::vector<int>& order) {
  std::vector<int> new_id(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    new_id[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  }
  std::vector<std::vector<int>> out;
  out.reserve(facets.size());
  for (const auto& f : facets) {
    std::vector<int> g;
    g.reserve(f.size());
    for (int v : f) g.push_back(new_id[static_cast<std::size_t>(v)]);
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CanonicalForm canonical_form(const SimplicialComplex& c, std::size_t size_limit) {
  const std::size_t n = c.vertex_count();
  if (n > size_limit) {
    throw Error(ErrorCode::SizeLimit,
                "canonical form limited to " + std::to_string(size_limit) + " vertices");
  }

  Refiner refiner(c);
  std::optional<std::vector<std::vector<int>>> best;

  std::function<void(Refiner::Cells)> search = [&](Refiner::Cells cells) {
    refiner.refine(cells);
    std::size_t branch_cell = cells.size();
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      if (cells[ci].size() > 1) {
        branch_cell = ci;
        break;
      }
    }
    if (branch_cell == cells.size()) {
      std::vector<int> order;
      order.reserve(n);
      for (const auto& cell : cells) order.push_back(cell.front());
      auto candidate = encode_with_order(c.facet_ids(), order);
      if (!best || candidate < *best) best = std::move(candidate);
      return;
    }
    for (int v : cells[branch_cell]) {
      Refiner::Cells next;
      next.reserve(cells.size() + 1);
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (ci == branch_cell) {
          next.push_back({v});
          std::vector<int> rest;
          for (int u : cells[ci]) {
            if (u != v) rest.push_back(u);
          }
          next.push_back(std::move(rest));
        } else {
          next.push_back(cells[ci]);
        }
      }
      search(std::move(next));
    }
  };

  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  search({all});

  CanonicalForm form;
  form.facets = std::move(*best);
  return form;
}

}  // namespace trishell
