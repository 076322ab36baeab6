#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>

#include "jmfem/mesh.hpp"

namespace jmfem {

using VectorField = std::function<Vec2(const Vec2&)>;

/// Barycentric coordinates and their (constant) gradients on a triangle.
struct P1Frame {
  std::array<Vec2, 3> coords;
  std::array<Vec2, 3> grad;
  double area = 0.0;

  explicit P1Frame(const std::array<Vec2, 3>& v);
  Eigen::Vector3d lambda(const Vec2& p) const;
};

/// Scalar P2 Lagrange basis on a triangle; node order (v0, v1, v2, m0, m1, m2)
/// where m_i is the midpoint of the edge opposite vertex i.
Eigen::Matrix<double, 6, 1> p2_values(const Eigen::Vector3d& lambda);
std::array<Vec2, 6> p2_gradients(const P1Frame& frame, const Eigen::Vector3d& lambda);

/// Elementwise L2 projection of a vector field onto [P1(K)]^2; returns the
/// vertex values (projection coefficients in the barycentric basis).
/// Integration runs over the barycentric sub-triangles so piecewise inputs
/// are handled; `order` is the per-sub-triangle quadrature order.
Eigen::Matrix<double, 6, 1> project_p1_local(const MacroMesh& mesh, int t, const VectorField& f,
                                             int order = 4);

/// Projection of the whole field: 6 entries per triangle, layout
/// [6t + 2*vertex + comp].
Eigen::VectorXd project_displacement_p1(const MacroMesh& mesh, const VectorField& f,
                                        int order = 4);

/// Sub-triangle averages of the barycentric functions on the barycentric
/// split: row i holds the averages of (lambda_0, lambda_1, lambda_2) over
/// K_i. The matrix is the same for every triangle.
Eigen::Matrix3d submean_matrix();
Eigen::Matrix3d submean_matrix_inverse();

/// P1 field matching the sub-triangle averages of f: the projection adapted
/// to the composite stress element, for which (div tau, f - proj f)_K = 0
/// holds for every element stress field tau. Returns vertex values in the
/// layout of project_p1_local.
Eigen::Matrix<double, 6, 1> project_p1_submean_local(const MacroMesh& mesh, int t,
                                                     const VectorField& f, int order = 4);
Eigen::VectorXd project_displacement_submean(const MacroMesh& mesh, const VectorField& f,
                                             int order = 4);

/// Piecewise-constant (per sub-triangle) load representative matching the
/// moments of f against [P1(K)]^2. The discrete solution satisfies
/// div sigma_h + proj f = 0 pointwise with this projection.
std::array<Vec2, 3> project_load_submean(const MacroMesh& mesh, int t, const VectorField& f,
                                         int order = 4);

/// Traction moments of g over the oriented segment A->B:
///   ((1/L) int g_x, (1/L) int g_y, (1/L) int g_x q, (1/L) int g_y q)
/// with q the signed linear weight (-1 at A, +1 at B). These are exactly the
/// coefficients determining the L2 projection of g onto [P1(E)]^2.
Eigen::Vector4d edge_traction_moments(const Vec2& A, const Vec2& B, const VectorField& g,
                                      int npoints = 5);

/// Value of the edge-P1 projection with given moments at parameter s in [0,1].
Vec2 edge_projection_value(const Eigen::Vector4d& moments, double s);

}  // namespace jmfem
