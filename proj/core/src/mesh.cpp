#include "jmfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

namespace jmfem {

double triangle_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

MacroMesh::MacroMesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles,
                     std::vector<std::pair<std::array<int, 2>, BoundaryTag>> boundary)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    auto& tri = triangles_[t];
    if (triangle_area(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]) <= 0.0)
      throw std::invalid_argument("MacroMesh: triangle " + std::to_string(t) +
                                  " is not positively oriented");
  }

  // Rotate indices so the longest edge sits opposite vertex 0; even rotations
  // keep orientation. This fixes the initial bisection edge.
  for (auto& tri : triangles_) {
    double best = -1.0;
    int bestk = 0;
    for (int k = 0; k < 3; ++k) {
      const double len =
          (vertices_[tri[(k + 1) % 3]] - vertices_[tri[(k + 2) % 3]]).norm();
      if (len > best) {
        best = len;
        bestk = k;
      }
    }
    std::rotate(tri.begin(), tri.begin() + bestk, tri.end());
  }

  parents_.resize(triangles_.size());
  for (std::size_t t = 0; t < triangles_.size(); ++t) parents_[t] = static_cast<int>(t);

  build_edges();

  std::map<std::pair<int, int>, BoundaryTag> tagmap;
  for (const auto& [pair, tag] : boundary)
    tagmap[{std::min(pair[0], pair[1]), std::max(pair[0], pair[1])}] = tag;
  for (auto& e : edges_) {
    if (!e.on_boundary()) continue;
    auto it = tagmap.find({e.a, e.b});
    if (it == tagmap.end())
      throw std::invalid_argument("MacroMesh: boundary edge without a tag");
    e.tag = it->second;
  }
}

void MacroMesh::build_edges() {
  edges_.clear();
  tri_edges_.assign(triangles_.size(), {-1, -1, -1});
  std::map<std::pair<int, int>, int> index;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (int k = 0; k < 3; ++k) {
      const int a = tri[(k + 1) % 3], b = tri[(k + 2) % 3];
      const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      auto it = index.find(key);
      if (it == index.end()) {
        Edge e;
        e.a = key.first;
        e.b = key.second;
        e.tri[0] = static_cast<int>(t);
        index[key] = static_cast<int>(edges_.size());
        tri_edges_[t][k] = static_cast<int>(edges_.size());
        edges_.push_back(e);
      } else {
        Edge& e = edges_[it->second];
        if (e.tri[1] >= 0)
          throw std::invalid_argument("MacroMesh: edge shared by more than two triangles");
        e.tri[1] = static_cast<int>(t);
        tri_edges_[t][k] = it->second;
      }
    }
  }
}

int MacroMesh::neighbor(int t, int k) const {
  const Edge& e = edges_[tri_edges_[t][k]];
  return e.tri[0] == t ? e.tri[1] : e.tri[0];
}

std::array<Vec2, 3> MacroMesh::triangle_coords(int t) const {
  const auto& tri = triangles_[t];
  return {vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]};
}

double MacroMesh::area(int t) const {
  const auto c = triangle_coords(t);
  return triangle_area(c[0], c[1], c[2]);
}

double MacroMesh::diameter(int t) const {
  const auto c = triangle_coords(t);
  return std::max({(c[1] - c[0]).norm(), (c[2] - c[1]).norm(), (c[0] - c[2]).norm()});
}

double MacroMesh::total_area() const {
  double s = 0.0;
  for (int t = 0; t < num_triangles(); ++t) s += area(t);
  return s;
}

double MacroMesh::min_angle() const {
  double amin = M_PI;
  for (int t = 0; t < num_triangles(); ++t) {
    const auto c = triangle_coords(t);
    for (int k = 0; k < 3; ++k) {
      const Vec2 u = c[(k + 1) % 3] - c[k];
      const Vec2 v = c[(k + 2) % 3] - c[k];
      amin = std::min(amin, std::acos(std::clamp(u.dot(v) / (u.norm() * v.norm()), -1.0, 1.0)));
    }
  }
  return amin;
}

bool MacroMesh::has_dirichlet_boundary() const {
  for (const auto& e : edges_)
    if (e.on_boundary() && e.tag == BoundaryTag::DirichletD) return true;
  return false;
}

bool MacroMesh::vertex_on_dirichlet(int i) const {
  for (const auto& e : edges_)
    if (e.on_boundary() && e.tag == BoundaryTag::DirichletD && (e.a == i || e.b == i))
      return true;
  return false;
}

MacroSplit barycentric_split(const MacroMesh& mesh, int t) {
  if (t < 0 || t >= mesh.num_triangles())
    throw std::out_of_range("barycentric_split: invalid triangle index");
  MacroSplit s;
  s.vertex = mesh.triangle_coords(t);
  s.barycenter = (s.vertex[0] + s.vertex[1] + s.vertex[2]) / 3.0;
  return s;
}

MacroMesh refine(const MacroMesh& mesh, const std::vector<int>& marked) {
  const int nt = mesh.num_triangles();
  for (int t : marked)
    if (t < 0 || t >= nt) throw std::out_of_range("refine: marked index out of range");
  if (marked.empty()) {
    MacroMesh out = mesh;
    for (int t = 0; t < nt; ++t) out.parents_[t] = t;
    return out;
  }

  // Closure: collect the set of edges to cut. Cutting the bisection edge of a
  // triangle forces the neighbor across it to cut its own bisection edge.
  std::vector<char> cut(mesh.num_edges(), 0);
  std::deque<int> queue(marked.begin(), marked.end());
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    const int e = mesh.tri_edge(t, 0);
    if (cut[e]) continue;
    cut[e] = 1;
    for (int side : mesh.edge(e).tri) {
      if (side < 0) continue;
      if (!cut[mesh.tri_edge(side, 0)]) queue.push_back(side);
    }
  }

  std::vector<Vec2> vertices = mesh.vertices();
  std::vector<int> midpoint(mesh.num_edges(), -1);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!cut[e]) continue;
    midpoint[e] = static_cast<int>(vertices.size());
    vertices.push_back(0.5 * (mesh.vertex(mesh.edge(e).a) + mesh.vertex(mesh.edge(e).b)));
  }

  std::vector<std::array<int, 3>> triangles;
  std::vector<int> parents;
  // Child of (m, peak, base-end): bisection edge is the old parent edge
  // (peak, base-end), stored opposite the newest vertex m.
  auto emit = [&](int m, int p, int q, int parent) {
    triangles.push_back({m, p, q});
    parents.push_back(parent);
  };
  for (int t = 0; t < nt; ++t) {
    const auto& tri = mesh.triangle(t);
    const int e0 = mesh.tri_edge(t, 0);
    if (!cut[e0]) {
      triangles.push_back(tri);
      parents.push_back(t);
      continue;
    }
    const int m = midpoint[e0];
    // Children (m, v0, v1) and (m, v2, v0); their bisection edges are the
    // parent edges (v0,v1) = local edge 2 and (v2,v0) = local edge 1.
    const std::array<std::array<int, 3>, 2> child{{{m, tri[0], tri[1]}, {m, tri[2], tri[0]}}};
    const std::array<int, 2> child_edge{mesh.tri_edge(t, 2), mesh.tri_edge(t, 1)};
    for (int c = 0; c < 2; ++c) {
      if (!cut[child_edge[c]]) {
        triangles.push_back(child[c]);
        parents.push_back(t);
      } else {
        const int mm = midpoint[child_edge[c]];
        emit(mm, child[c][0], child[c][1], t);
        emit(mm, child[c][2], child[c][0], t);
      }
    }
  }

  MacroMesh out;
  out.vertices_ = std::move(vertices);
  out.triangles_ = std::move(triangles);
  out.parents_ = std::move(parents);
  out.build_edges();

  // Inherit boundary tags: each new boundary edge lies inside a parent
  // boundary edge; match through the endpoint that is an original vertex.
  std::map<std::pair<int, int>, BoundaryTag> old_tags;
  for (const auto& e : mesh.edges())
    if (e.on_boundary()) old_tags[{e.a, e.b}] = e.tag;
  std::map<int, std::pair<int, int>> midpoint_of;  // new vertex -> old edge endpoints
  for (int e = 0; e < mesh.num_edges(); ++e)
    if (midpoint[e] >= 0) midpoint_of[midpoint[e]] = {mesh.edge(e).a, mesh.edge(e).b};

  const int n_old_vertices = mesh.num_vertices();
  for (auto& e : out.edges_) {
    if (!e.on_boundary()) continue;
    int a = e.a, b = e.b;
    if (a >= n_old_vertices) std::swap(a, b);  // a is an original vertex now, b may be a midpoint
    std::pair<int, int> key;
    if (b >= n_old_vertices) {
      key = midpoint_of.at(b);
    } else {
      key = {std::min(a, b), std::max(a, b)};
    }
    auto it = old_tags.find(key);
    if (it == old_tags.end())
      throw std::logic_error("refine: could not inherit boundary tag");
    e.tag = it->second;
  }
  return out;
}

}  // namespace jmfem
