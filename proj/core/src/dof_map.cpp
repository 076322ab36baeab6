#include "jmfem/dof_map.hpp"

namespace jmfem {

DofMap build_dof_map(const MacroMesh& mesh) {
  DofMap map;
  const int ne = mesh.num_edges();
  const int nt = mesh.num_triangles();
  map.n_stress = 4 * ne + 3 * nt;
  map.n_disp = 6 * nt;
  map.n_lambda = mesh.has_dirichlet_boundary() ? 0 : 3;

  map.stress_global.resize(nt);
  for (int t = 0; t < nt; ++t) {
    auto& local = map.stress_global[t];
    for (int e = 0; e < 3; ++e) {
      const int ge = mesh.tri_edge(t, e);
      for (int w = 0; w < 4; ++w) local[4 * e + w] = 4 * ge + w;
    }
    for (int w = 0; w < 3; ++w) local[12 + w] = 4 * ne + 3 * t + w;
  }

  for (int e = 0; e < ne; ++e)
    if (mesh.edge(e).on_boundary() && mesh.edge(e).tag == BoundaryTag::TractionN)
      map.neumann_edges.push_back(e);
  return map;
}

}  // namespace jmfem
