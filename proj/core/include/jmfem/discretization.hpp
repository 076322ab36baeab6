#pragma once

#include <Eigen/Dense>
#include <vector>

#include "jmfem/dof_map.hpp"
#include "jmfem/jm_element.hpp"
#include "jmfem/mesh.hpp"

namespace jmfem {

/// Mesh plus the per-triangle composite stress bases and the dof layout.
struct Discretization {
  const MacroMesh* mesh = nullptr;
  std::vector<JMElementBasis> bases;
  DofMap dofs;
};

inline Discretization build_discretization(const MacroMesh& mesh) {
  Discretization d;
  d.mesh = &mesh;
  d.bases.reserve(mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t) d.bases.push_back(build_jm_basis(mesh, t));
  d.dofs = build_dof_map(mesh);
  return d;
}

/// Local stress coefficients of triangle t gathered from the global vector.
inline Eigen::Matrix<double, 15, 1> local_stress(const Discretization& d,
                                                 const Eigen::VectorXd& stress, int t) {
  Eigen::Matrix<double, 15, 1> c;
  for (int i = 0; i < 15; ++i) c[i] = stress[d.dofs.stress_global[t][i]];
  return c;
}

/// Pointwise stress of the discrete field inside triangle t.
inline SymTensor2 stress_at(const Discretization& d, const Eigen::VectorXd& stress, int t,
                            const Vec2& p) {
  return d.bases[t].eval(local_stress(d, stress, t), p);
}

/// Divergence of the discrete stress on sub-triangle `sub` of triangle t.
inline Vec2 stress_div_at(const Discretization& d, const Eigen::VectorXd& stress, int t, int sub) {
  return d.bases[t].div(local_stress(d, stress, t), sub);
}

}  // namespace jmfem
