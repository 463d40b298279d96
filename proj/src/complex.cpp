// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/complex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace trishell {

bool is_valid_label(const Label& label) {
  if (label.empty()) return false;
  for (unsigned char ch : label) {
    if (std::isspace(ch) || ch == '#' || ch < 0x20 || ch == 0x7f) return false;
  }
  return true;
}

Simplex make_simplex(std::vector<Label> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::EmptyInput, "simplex needs at least one vertex");
  }
  for (const Label& label : labels) {
    if (!is_valid_label(label)) {
      throw Error(ErrorCode::BadLabel, "malformed vertex label '" + label + "'");
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::vector<int> set_intersection_ids(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size_ids(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t simplex_intersection_size(const Simplex& a, const Simplex& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

bool simplex_subset(const Simplex& sub, const Simplex& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facet_lists) {
  if (facet_lists.empty()) {
    throw Error(ErrorCode::EmptyInput, "no facets given");
  }
  std::vector<Simplex> normalized;
  normalized.reserve(facet_lists.size());
  for (const Simplex& raw : facet_lists) {
    normalized.push_back(make_simplex(raw));
  }

  // Keep maximal simplices only.
  std::vector<Simplex> maximal;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < normalized.size() && !dominated; ++j) {
      if (i == j) continue;
      if (normalized[i].size() < normalized[j].size() &&
          simplex_subset(normalized[i], normalized[j])) {
        dominated = true;
      } else if (normalized[i] == normalized[j] && j < i) {
        dominated = true;  // duplicate, keep the first occurrence
      }
    }
    if (!dominated) maximal.push_back(normalized[i]);
  }

  SimplicialComplex c;
  std::set<Label> labels;
  for (const Simplex& f : maximal) labels.insert(f.begin(), f.end());
  c.labels_.assign(labels.begin(), labels.end());

  for (const Simplex& f : maximal) {
    std::vector<int> ids;
    ids.reserve(f.size());
    for (const Label& label : f) ids.push_back(c.vertex_id(label));
    std::sort(ids.begin(), ids.end());
    c.facets_.push_back(std::move(ids));
  }
  std::sort(c.facets_.begin(), c.facets_.end());
  c.facets_.erase(std::unique(c.facets_.begin(), c.facets_.end()), c.facets_.end());
  return c;
}

Simplex SimplicialComplex::facet(std::size_t i) const { return to_labels(facets_[i]); }

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(to_labels(f));
  return out;
}

int SimplicialComplex::max_rank() const {
  std::size_t r = 0;
  for (const auto& f : facets_) r = std::max(r, f.size());
  return static_cast<int>(r);
}

std::optional<int> SimplicialComplex::uniform_rank() const {
  if (facets_.empty()) return std::nullopt;
  std::size_t r = facets_.front().size();
  for (const auto& f : facets_) {
    if (f.size() != r) return std::nullopt;
  }
  return static_cast<int>(r);
}

bool SimplicialComplex::has_vertex(const Label& label) const { return vertex_id(label) >= 0; }

int SimplicialComplex::vertex_id(const Label& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

int SimplicialComplex::vertex_degree(int id) const {
  int degree = 0;
  for (const auto& f : facets_) {
    if (std::binary_search(f.begin(), f.end(), id)) ++degree;
  }
  return degree;
}

std::optional<std::vector<int>> SimplicialComplex::to_ids(const Simplex& simplex) const {
  std::vector<int> ids;
  ids.reserve(simplex.size());
  for (const Label& label : simplex) {
    int id = vertex_id(label);
    if (id < 0) return std::nullopt;
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

Simplex SimplicialComplex::to_labels(const std::vector<int>& ids) const {
  Simplex out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(labels_[static_cast<std::size_t>(id)]);
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::has_face(const Simplex& simplex) const {
  auto ids = to_ids(simplex);
  if (!ids) return false;
  for (const auto& f : facets_) {
    if (std::includes(f.begin(), f.end(), ids->begin(), ids->end())) return true;
  }
  return false;
}

namespace {

void subsets_of_size(const std::vector<int>& items, std::size_t r, std::size_t start,
                     std::vector<int>& current, std::set<std::vector<int>>& out) {
  if (current.size() == r) {
    out.insert(current);
    return;
  }
  for (std::size_t i = start; i + (r - current.size()) <= items.size(); ++i) {
    current.push_back(items[i]);
    subsets_of_size(items, r, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Simplex> SimplicialComplex::faces_of_rank(int r) const {
  if (r < 1) {
    throw Error(ErrorCode::BadParameter, "face rank must be positive");
  }
  std::set<std::vector<int>> faces;
  std::vector<int> current;
  for (const auto& f : facets_) {
    if (f.size() < static_cast<std::size_t>(r)) continue;
    subsets_of_size(f, static_cast<std::size_t>(r), 0, current, faces);
  }
  std::vector<Simplex> out;
  out.reserve(faces.size());
  for (const auto& ids : faces) out.push_back(to_labels(ids));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SimplicialComplex::count_faces_of_rank(int r) const {
  if (r < 1) {
    throw Error(ErrorCode::BadParameter, "face rank must be positive");
  }
  std::set<std::vector<int>> faces;
  std::vector<int> current;
  for (const auto& f : facets_) {
    if (f.size() < static_cast<std::size_t>(r)) continue;
    subsets_of_size(f, static_cast<std::size_t>(r), 0, current, faces);
  }
  return faces.size();
}

std::vector<int> SimplicialComplex::facets_containing(const std::vector<int>& face) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (std::includes(facets_[i].begin(), facets_[i].end(), face.begin(), face.end())) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::vertex_neighbourhood(const Label& v) const {
  int id = vertex_id(v);
  if (id < 0) {
    throw Error(ErrorCode::VertexNotFound, "vertex '" + v + "' not in complex");
  }
  if (uniform_rank() != std::optional<int>(4)) {
    throw Error(ErrorCode::WrongDimension, "vertex neighbourhood needs a 3-dimensional complex");
  }
  std::vector<Simplex> link_facets;
  for (const auto& f : facets_) {
    if (!std::binary_search(f.begin(), f.end(), id)) continue;
    Simplex reduced;
    for (int u : f) {
      if (u != id) reduced.push_back(labels_[static_cast<std::size_t>(u)]);
    }
    std::sort(reduced.begin(), reduced.end());
    link_facets.push_back(std::move(reduced));
  }
  return from_facets(link_facets);
}

namespace {

// Hamiltonian cycle in the facet-adjacency graph (adjacent = share a
// triangle). Star sizes are tiny, so plain backtracking is enough.
bool hamiltonian_cycle(const std::vector<std::vector<bool>>& adj, std::vector<int>& cycle) {
  const std::size_t k = adj.size();
  std::vector<int> path{0};
  std::vector<bool> used(k, false);
  used[0] = true;

  std::function<bool()> extend = [&]() -> bool {
    if (path.size() == k) return adj[static_cast<std::size_t>(path.back())][0];
    for (std::size_t next = 1; next < k; ++next) {
      if (used[next] || !adj[static_cast<std::size_t>(path.back())][next]) continue;
      used[next] = true;
      path.push_back(static_cast<int>(next));
      if (extend()) return true;
      path.pop_back();
      used[next] = false;
    }
    return false;
  };

  if (!extend()) return false;
  cycle = path;
  return true;
}

}  // namespace

EdgeStar edge_star(const SimplicialComplex& c, const Simplex& edge) {
  Simplex e = make_simplex(edge);
  if (e.size() != 2) {
    throw Error(ErrorCode::BadParameter, "edge must have exactly two vertices");
  }
  auto ids = c.to_ids(e);
  if (!ids || !c.has_face(e)) {
    throw Error(ErrorCode::FaceNotFound, "edge is not a face of the complex");
  }
  std::vector<int> star = c.facets_containing(*ids);
  for (int fi : star) {
    if (c.facet_ids()[static_cast<std::size_t>(fi)].size() != 4) {
      throw Error(ErrorCode::WrongDimension, "edge star requires tetrahedral facets");
    }
  }

  EdgeStar result;
  const std::size_t k = star.size();
  if (k < 3) {
    for (int fi : star) result.facets.push_back(c.facet(static_cast<std::size_t>(fi)));
    result.cyclic = false;
    return result;
  }

  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& fi = c.facet_ids()[static_cast<std::size_t>(star[i])];
      const auto& fj = c.facet_ids()[static_cast<std::size_t>(star[j])];
      if (intersection_size_ids(fi, fj) == 3) adj[i][j] = adj[j][i] = true;
    }
  }

  std::vector<int> cycle;
  if (hamiltonian_cycle(adj, cycle)) {
    result.cyclic = true;
    for (int pos : cycle) {
      result.facets.push_back(c.facet(static_cast<std::size_t>(star[static_cast<std::size_t>(pos)])));
    }
  } else {
    result.cyclic = false;
    for (int fi : star) result.facets.push_back(c.facet(static_cast<std::size_t>(fi)));
  }
  return result;
}

std::vector<Simplex> edge_star_facets(const SimplicialComplex& c, const Simplex& edge) {
  EdgeStar star = edge_star(c, edge);
  if (!star.cyclic) {
    throw Error(ErrorCode::NotCyclic, "facets around the edge admit no cyclic order");
  }
  return star.facets;
}

}  // namespace trishell
