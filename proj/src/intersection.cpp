// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/intersection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "trishell/isomorphism.hpp"

namespace trishell {

IntersectionMatrix intersection_matrix(const SimplicialComplex& c,
                                       const std::optional<std::vector<Simplex>>& order) {
  std::vector<Simplex> facet_order;
  if (order) {
    facet_order.reserve(order->size());
    for (const Simplex& f : *order) facet_order.push_back(make_simplex(f));
    auto sorted = facet_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets()) {
      throw Error(ErrorCode::BadOrder, "order is not a permutation of the facet set");
    }
  } else {
    facet_order = c.facets();  // label-lexicographic default
  }

  const std::size_t m = facet_order.size();
  IntersectionMatrix result;
  result.facet_order = facet_order;
  result.entries.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      int rank = static_cast<int>(simplex_intersection_size(facet_order[i], facet_order[j]));
      result.entries[i][j] = rank;
      result.entries[j][i] = rank;
    }
  }
  return result;
}

Simplex FacetBijection::image_of(const Simplex& source_facet) const {
  for (std::size_t i = 0; i < source_order.size(); ++i) {
    if (source_order[i] == source_facet) {
      return target_order[static_cast<std::size_t>(assignment[i])];
    }
  }
  throw Error(ErrorCode::FaceNotFound, "facet is not in the source order");
}

FacetBijection FacetBijection::inverse() const {
  FacetBijection inv;
  inv.source_order = target_order;
  inv.target_order = source_order;
  inv.assignment.assign(assignment.size(), -1);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    inv.assignment[static_cast<std::size_t>(assignment[i])] = static_cast<int>(i);
  }
  inv.verified = verified;
  return inv;
}

namespace {

void require_bijection(const SimplicialComplex& a, const SimplicialComplex& b,
                       const FacetBijection& m) {
  if (a.facet_count() != b.facet_count()) {
    throw Error(ErrorCode::NotBijective, "facet counts differ");
  }
  if (m.source_order.size() != a.facet_count() || m.target_order.size() != b.facet_count() ||
      m.assignment.size() != a.facet_count()) {
    throw Error(ErrorCode::NotBijective, "map does not pair all facets");
  }
  auto sorted_src = m.source_order;
  std::sort(sorted_src.begin(), sorted_src.end());
  if (sorted_src != a.facets()) {
    throw Error(ErrorCode::NotBijective, "source order is not the source facet set");
  }
  auto sorted_tgt = m.target_order;
  std::sort(sorted_tgt.begin(), sorted_tgt.end());
  if (sorted_tgt != b.facets()) {
    throw Error(ErrorCode::NotBijective, "target order is not the target facet set");
  }
  std::vector<bool> hit(m.assignment.size(), false);
  for (int t : m.assignment) {
    if (t < 0 || static_cast<std::size_t>(t) >= m.assignment.size() ||
        hit[static_cast<std::size_t>(t)]) {
      throw Error(ErrorCode::NotBijective, "assignment is not a permutation");
    }
    hit[static_cast<std::size_t>(t)] = true;
  }
}

}  // namespace

bool is_facet_pairing(const SimplicialComplex& a, const SimplicialComplex& b,
                      const FacetBijection& m) {
  try {
    require_bijection(a, b, m);
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool is_intersection_preserving(const SimplicialComplex& a, const SimplicialComplex& b,
                                const FacetBijection& m) {
  require_bijection(a, b, m);
  const std::size_t k = m.source_order.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Simplex& xi = m.source_order[i];
    const Simplex& yi = m.target_order[static_cast<std::size_t>(m.assignment[i])];
    for (std::size_t j = i; j < k; ++j) {
      const Simplex& xj = m.source_order[j];
      const Simplex& yj = m.target_order[static_cast<std::size_t>(m.assignment[j])];
      if (simplex_intersection_size(xi, xj) != simplex_intersection_size(yi, yj)) {
        return false;
      }
    }
  }
  return true;
}

FacetBijection verify_map(const SimplicialComplex& a, const SimplicialComplex& b,
                          FacetBijection m) {
  m.verified = is_intersection_preserving(a, b, m);
  return m;
}

std::vector<FacetBijection> find_intersection_preserving_maps(const SimplicialComplex& a,
                                                              const SimplicialComplex& b,
                                                              std::size_t limit) {
  if (limit == 0) {
    throw Error(ErrorCode::BadParameter, "limit must be positive");
  }
  std::vector<FacetBijection> results;
  if (a.facet_count() != b.facet_count()) return results;

  const IntersectionMatrix ma = intersection_matrix(a);
  const IntersectionMatrix mb = intersection_matrix(b);
  const std::size_t k = ma.facet_order.size();

  // Sorted row multisets: a facet can only map to one with the same profile.
  auto row_profile = [](const IntersectionMatrix& m, std::size_t i) {
    std::vector<int> row = m.entries[i];
    std::sort(row.begin(), row.end());
    return row;
  };
  std::vector<std::vector<int>> prof_a(k), prof_b(k);
  for (std::size_t i = 0; i < k; ++i) {
    prof_a[i] = row_profile(ma, i);
    prof_b[i] = row_profile(mb, i);
  }
  {
    auto all_a = prof_a;
    auto all_b = prof_b;
    std::sort(all_a.begin(), all_a.end());
    std::sort(all_b.begin(), all_b.end());
    if (all_a != all_b) return results;
  }

  std::vector<int> assignment(k, -1);
  std::vector<bool> used(k, false);

  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (results.size() >= limit) return;
    if (i == k) {
      FacetBijection m;
      m.source_order = ma.facet_order;
      m.target_order = mb.facet_order;
      m.assignment = assignment;
      m.verified = true;
      results.push_back(std::move(m));
      return;
    }
    for (std::size_t j = 0; j < k && results.size() < limit; ++j) {
      if (used[j] || prof_a[i] != prof_b[j]) continue;
      bool consistent = ma.entries[i][i] == mb.entries[j][j];
      for (std::size_t i2 = 0; i2 < i && consistent; ++i2) {
        if (ma.entries[i][i2] != mb.entries[j][static_cast<std::size_t>(assignment[i2])]) {
          consistent = false;
        }
      }
      if (!consistent) continue;
      assignment[i] = static_cast<int>(j);
      used[j] = true;
      extend(i + 1);
      assignment[i] = -1;
      used[j] = false;
    }
  };

  extend(0);
  return results;
}

FacetBijection induced_facet_map(const SimplicialComplex& a, const SimplicialComplex& b,
                                 const VertexMap& phi) {
  if (!is_isomorphism(a, b, phi)) {
    throw Error(ErrorCode::BadParameter, "vertex map is not an isomorphism");
  }
  FacetBijection m;
  m.source_order = a.facets();
  m.target_order = b.facets();
  std::map<Simplex, int> target_index;
  for (std::size_t j = 0; j < m.target_order.size(); ++j) {
    target_index[m.target_order[j]] = static_cast<int>(j);
  }
  m.assignment.reserve(m.source_order.size());
  for (const Simplex& f : m.source_order) {
    Simplex image;
    image.reserve(f.size());
    for (const Label& v : f) image.push_back(phi.at(v));
    std::sort(image.begin(), image.end());
    m.assignment.push_back(target_index.at(image));
  }
  m.verified = true;
  return m;
}

}  // namespace trishell
