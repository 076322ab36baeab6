#pragma once

#include <functional>

#include "jmfem/material.hpp"
#include "jmfem/mesh.hpp"

namespace jmfem {

/// Pointwise tensor field given per triangle (piecewise-smooth evaluation).
using TensorFieldFn = std::function<SymTensor2(int t, const Vec2&)>;

/// Integral of a scalar integrand over the mesh, quadrature running on the
/// barycentric sub-triangles of every macro cell.
double integrate(const MacroMesh& mesh, int order,
                 const std::function<double(int, const Vec2&)>& fn);

/// Same restricted to one macro triangle.
double integrate_local(const MacroMesh& mesh, int t, int order,
                       const std::function<double(int, const Vec2&)>& fn);

/// Energy norm (sum_K int_K (C tau) : tau)^(1/2).
double energy_norm(const Material& material, const TensorFieldFn& field, const MacroMesh& mesh,
                   int order = 8);

/// L2 norm of a tensor field (Frobenius, the xy entry double counted).
double l2_norm(const TensorFieldFn& field, const MacroMesh& mesh, int order = 8);

/// Broken energy-type norm of a per-triangle P1 vector field
/// (layout [6t + 2*vertex + comp]):
///   ||v||_h^2 = sum_K ||eps(v)||^2 + sum_{interior E} h_E^{-1} ||[v]||^2
///             + sum_{E in Dirichlet} h_E^{-1} ||v||^2.
double broken_h_norm(const MacroMesh& mesh, const Eigen::VectorXd& p1_field);

}  // namespace jmfem
