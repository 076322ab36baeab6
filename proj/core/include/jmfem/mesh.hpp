#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace jmfem {

using Vec2 = Eigen::Vector2d;

enum class BoundaryTag { TractionN, DirichletD };

/// Edge of the macro triangulation. Endpoints are stored with the lower
/// global vertex index first; tri[1] == -1 on the boundary.
struct Edge {
  int a = -1;
  int b = -1;
  std::array<int, 2> tri{-1, -1};
  BoundaryTag tag = BoundaryTag::TractionN;  // meaningful only on the boundary

  bool on_boundary() const { return tri[1] < 0; }
};

/// Conforming triangulation. Triangles are positively oriented index
/// triples; the designated bisection edge of triangle (v0,v1,v2) is the edge
/// (v1,v2) opposite the first stored vertex.
class MacroMesh {
 public:
  MacroMesh() = default;
  MacroMesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles,
            std::vector<std::pair<std::array<int, 2>, BoundaryTag>> boundary);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Vec2& vertex(int i) const { return vertices_[i]; }
  const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Global edge id of the local edge opposite vertex `k` of triangle `t`.
  int tri_edge(int t, int k) const { return tri_edges_[t][k]; }
  /// Neighbor across local edge `k` of `t`, or -1 on the boundary.
  int neighbor(int t, int k) const;

  std::array<Vec2, 3> triangle_coords(int t) const;
  double area(int t) const;
  double diameter(int t) const;
  double total_area() const;
  double min_angle() const;

  /// Index of the triangle this one was split from in the parent mesh
  /// (identity for generated meshes).
  int parent(int t) const { return parents_[t]; }

  bool has_dirichlet_boundary() const;
  /// True if vertex i lies on some Dirichlet boundary edge.
  bool vertex_on_dirichlet(int i) const;

  friend MacroMesh refine(const MacroMesh& mesh, const std::vector<int>& marked);

 private:
  void build_edges();

  std::vector<Vec2> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<int> parents_;
};

/// Barycentric split of one macro triangle into the three sub-triangles
/// K_i = (V_{i+1}, V_{i+2}, B) sharing the barycenter B. Sub-triangle K_i
/// contains the macro edge opposite vertex i; the internal edge i runs from
/// V_i to B and separates K_{i+1} from K_{i+2}.
struct MacroSplit {
  std::array<Vec2, 3> vertex;
  Vec2 barycenter;

  std::array<Vec2, 3> sub(int i) const {
    return {vertex[(i + 1) % 3], vertex[(i + 2) % 3], barycenter};
  }
  std::pair<Vec2, Vec2> internal_edge(int i) const { return {vertex[i], barycenter}; }
};

MacroSplit barycentric_split(const MacroMesh& mesh, int t);

/// Newest-vertex bisection with conforming closure. Every marked triangle is
/// bisected at least once; boundary tags are inherited by child edges.
MacroMesh refine(const MacroMesh& mesh, const std::vector<int>& marked);

double triangle_area(const Vec2& a, const Vec2& b, const Vec2& c);

}  // namespace jmfem
