// Copyright (c) 2026 The trishell authors.
// SPDX-License-Identifier: Apache-2.0
#include "trishell/validate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace trishell {

std::vector<std::string> ValidationReport::failed_checks() const {
  std::vector<std::string> failed;
  if (!dimension_ok) failed.push_back("dimension");
  if (dimension_ok && !is_pseudo_manifold) failed.push_back("pseudo_manifold");
  if (dimension_ok && !all_links_spheres) failed.push_back("vertex_links");
  if (dimension_ok && !all_edges_cyclic) failed.push_back("edge_stars");
  return failed;
}

std::vector<std::pair<Simplex, int>> check_pseudo_manifold(const SimplicialComplex& c) {
  if (c.uniform_rank() != std::optional<int>(4)) {
    throw Error(ErrorCode::WrongDimension, "pseudo-manifold check needs tetrahedral facets");
  }
  std::map<std::vector<int>, int> triangle_count;
  for (const auto& f : c.facet_ids()) {
    for (std::size_t skip = 0; skip < 4; ++skip) {
      std::vector<int> tri;
      tri.reserve(3);
      for (std::size_t i = 0; i < 4; ++i) {
        if (i != skip) tri.push_back(f[i]);
      }
      triangle_count[tri]++;
    }
  }
  std::vector<std::pair<Simplex, int>> bad;
  for (const auto& [tri, count] : triangle_count) {
    if (count != 2) bad.emplace_back(c.to_labels(tri), count);
  }
  std::sort(bad.begin(), bad.end());
  return bad;
}

namespace {

struct SurfaceData {
  std::map<std::vector<int>, std::vector<int>> edge_to_triangles;  // edge -> facet indices
  std::size_t vertex_count = 0;
};

SurfaceData surface_data(const SimplicialComplex& s) {
  SurfaceData data;
  data.vertex_count = s.vertex_count();
  const auto& facets = s.facet_ids();
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const auto& t = facets[fi];
    for (std::size_t skip = 0; skip < 3; ++skip) {
      std::vector<int> edge;
      for (std::size_t i = 0; i < 3; ++i) {
        if (i != skip) edge.push_back(t[i]);
      }
      data.edge_to_triangles[edge].push_back(static_cast<int>(fi));
    }
  }
  return data;
}

bool triangles_connected(const SimplicialComplex& s, const SurfaceData& data) {
  const std::size_t f = s.facet_count();
  if (f == 0) return false;
  std::vector<std::vector<int>> adjacency(f);
  for (const auto& [edge, tris] : data.edge_to_triangles) {
    for (std::size_t i = 0; i < tris.size(); ++i) {
      for (std::size_t j = i + 1; j < tris.size(); ++j) {
        adjacency[static_cast<std::size_t>(tris[i])].push_back(tris[j]);
        adjacency[static_cast<std::size_t>(tris[j])].push_back(tris[i]);
      }
    }
  }
  std::vector<bool> seen(f, false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (int next : adjacency[static_cast<std::size_t>(cur)]) {
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        ++reached;
        todo.push(next);
      }
    }
  }
  return reached == f;
}

}  // namespace

SurfaceCheck surface_is_sphere(const SimplicialComplex& s) {
  if (s.uniform_rank() != std::optional<int>(3)) {
    throw Error(ErrorCode::WrongDimension, "surface check needs triangle facets");
  }
  SurfaceData data = surface_data(s);

  SurfaceCheck check;
  check.closed = true;
  for (const auto& [edge, tris] : data.edge_to_triangles) {
    if (tris.size() != 2) {
      check.closed = false;
      break;
    }
  }
  check.connected = triangles_connected(s, data);
  check.euler = static_cast<long long>(data.vertex_count) -
                static_cast<long long>(data.edge_to_triangles.size()) +
                static_cast<long long>(s.facet_count());
  check.is_sphere = check.closed && check.connected && check.euler == 2;
  return check;
}

bool surface_is_orientable(const SimplicialComplex& s) {
  if (s.uniform_rank() != std::optional<int>(3)) {
    throw Error(ErrorCode::WrongDimension, "orientability check needs triangle facets");
  }
  SurfaceData data = surface_data(s);
  for (const auto& [edge, tris] : data.edge_to_triangles) {
    if (tris.size() > 2) {
      throw Error(ErrorCode::NotSurfaceLike, "an edge lies in more than two triangles");
    }
  }

  // Orientation of triangle (x<y<z) with sign +1 is the cycle x->y->z->x.
  // Direction it induces on edge (u<v): +1 when it traverses u->v.
  auto edge_direction = [](const std::vector<int>& tri, const std::vector<int>& edge, int sign) {
    // tri sorted (x,y,z); edges (x,y) and (y,z) follow the cycle, (x,z) opposes it.
    bool forward = !(edge[0] == tri[0] && edge[1] == tri[2]);
    return forward ? sign : -sign;
  };

  const auto& facets = s.facet_ids();
  std::vector<int> sign(s.facet_count(), 0);
  for (std::size_t seed = 0; seed < facets.size(); ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    std::queue<std::size_t> todo;
    todo.push(seed);
    while (!todo.empty()) {
      std::size_t cur = todo.front();
      todo.pop();
      const auto& t = facets[cur];
      for (std::size_t skip = 0; skip < 3; ++skip) {
        std::vector<int> edge;
        for (std::size_t i = 0; i < 3; ++i) {
          if (i != skip) edge.push_back(t[i]);
        }
        for (int other : data.edge_to_triangles.at(edge)) {
          auto oi = static_cast<std::size_t>(other);
          if (oi == cur) continue;
          // Coherent orientations traverse a shared edge in opposite directions.
          int needed = edge_direction(t, edge, sign[cur]) == 1 ? -1 : 1;
          int other_sign = edge_direction(facets[oi], edge, 1) == needed ? 1 : -1;
          if (sign[oi] == 0) {
            sign[oi] = other_sign;
            todo.push(oi);
          } else if (sign[oi] != other_sign) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

ValidationReport validate_triangulation(const SimplicialComplex& c) {
  ValidationReport report;
  report.dimension = c.dimension();
  report.dimension_ok = c.uniform_rank() == std::optional<int>(4);
  if (!report.dimension_ok) {
    report.verdict = false;
    return report;
  }

  report.bad_triangles = check_pseudo_manifold(c);
  report.is_pseudo_manifold = report.bad_triangles.empty();

  report.all_links_spheres = true;
  for (const Label& v : c.vertex_labels()) {
    VertexLinkResult result;
    result.vertex = v;
    result.link = surface_is_sphere(c.vertex_neighbourhood(v));
    report.all_links_spheres = report.all_links_spheres && result.link.is_sphere;
    report.vertex_link_results.push_back(std::move(result));
  }

  report.all_edges_cyclic = true;
  for (const Simplex& e : c.faces_of_rank(2)) {
    EdgeStarResult result;
    result.edge = e;
    EdgeStar star = edge_star(c, e);
    result.star_size = star.facets.size();
    result.cyclic = star.cyclic;
    report.all_edges_cyclic = report.all_edges_cyclic && result.cyclic;
    report.edge_link_results.push_back(std::move(result));
  }

  report.verdict = report.dimension_ok && report.is_pseudo_manifold &&
                   report.all_links_spheres && report.all_edges_cyclic;
  return report;
}

}  // namespace trishell
