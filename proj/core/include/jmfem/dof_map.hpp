#pragma once

#include <array>
#include <vector>

#include "jmfem/mesh.hpp"

namespace jmfem {

/// Global dof layout. Stress dofs come first: four traction moments per
/// macro edge (shared between neighbors, identical orientation on both
/// sides), then three interior moments per triangle. Displacement dofs are
/// per-triangle vertex values of the discontinuous P1 field, two components
/// interleaved: disp dof = 6*t + 2*local_vertex + component.
struct DofMap {
  int n_stress = 0;
  int n_disp = 0;
  int n_lambda = 0;  // 3 rigid-mode multipliers for pure-traction problems

  std::vector<std::array<int, 15>> stress_global;  // per triangle
  std::vector<int> neumann_edges;                  // edge ids on the traction boundary

  int total() const { return n_stress + n_disp + n_lambda; }
  static int disp_dof(int t, int vertex, int comp) { return 6 * t + 2 * vertex + comp; }
};

DofMap build_dof_map(const MacroMesh& mesh);

}  // namespace jmfem
