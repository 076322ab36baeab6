#pragma once

#include <Eigen/Dense>

#include "jmfem/discretization.hpp"
#include "jmfem/projection.hpp"

namespace jmfem {

/// Discrete solution of the mixed method together with the two-step
/// postprocessed displacement fields once they have been computed.
struct MixedSolution {
  Eigen::VectorXd stress;        // global stress dofs, essential values filled in
  Eigen::VectorXd displacement;  // 6 per triangle, [6t + 2*vertex + comp]
  Eigen::Vector3d multipliers = Eigen::Vector3d::Zero();
  bool pure_traction = false;

  // Step I output: per-triangle P2 vector field, [12t + 2*node + comp] with
  // the (v0,v1,v2,m0,m1,m2) node order.
  Eigen::VectorXd enhanced;
  // Step II output: continuous P2 field as global nodal values.
  Eigen::VectorXd avg_vertex;    // 2 per mesh vertex
  Eigen::VectorXd avg_midpoint;  // 2 per mesh edge
  bool has_postprocessed = false;
};

/// P1 displacement value inside triangle t from the per-triangle nodal data.
inline Vec2 displacement_at(const MacroMesh& mesh, const Eigen::VectorXd& disp, int t,
                            const Vec2& p) {
  const P1Frame frame(mesh.triangle_coords(t));
  const Eigen::Vector3d l = frame.lambda(p);
  Vec2 out = Vec2::Zero();
  for (int i = 0; i < 3; ++i)
    out += l[i] * Vec2(disp[6 * t + 2 * i], disp[6 * t + 2 * i + 1]);
  return out;
}

/// Strain of the per-triangle P1 field (constant per triangle).
inline SymTensor2 p1_strain(const MacroMesh& mesh, const Eigen::VectorXd& disp, int t) {
  const P1Frame frame(mesh.triangle_coords(t));
  double gxx = 0, gyy = 0, gxy = 0, gyx = 0;
  for (int i = 0; i < 3; ++i) {
    const Vec2 u(disp[6 * t + 2 * i], disp[6 * t + 2 * i + 1]);
    gxx += u.x() * frame.grad[i].x();
    gxy += u.x() * frame.grad[i].y();
    gyx += u.y() * frame.grad[i].x();
    gyy += u.y() * frame.grad[i].y();
  }
  return {gxx, gyy, 0.5 * (gxy + gyx)};
}

/// Nodal values (12) of the averaged field restricted to triangle t.
Eigen::Matrix<double, 12, 1> averaged_local(const MacroMesh& mesh, const MixedSolution& sol,
                                            int t);

/// Value / strain of a local P2 vector field given by 12 nodal values.
Vec2 p2_value(const P1Frame& frame, const Eigen::Matrix<double, 12, 1>& nodal, const Vec2& p);
SymTensor2 p2_strain(const P1Frame& frame, const Eigen::Matrix<double, 12, 1>& nodal,
                     const Vec2& p);

}  // namespace jmfem
