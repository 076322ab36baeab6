#pragma once

#include "jmfem/material.hpp"
#include "jmfem/solution.hpp"

namespace jmfem {

/// Step I on one triangle: the local P2 enhancement determined by
///   P_h u* = u_h  (six moment rows against the P1 basis) and
///   (eps(u*), eps(v))_K = (C sigma_h, eps(v))_K for v spanning (I-P_h)P2.
/// Returns the 12 nodal values [2*node + comp].
Eigen::Matrix<double, 12, 1> enhance_local(const Discretization& disc, const Material& material,
                                           const MixedSolution& sol, int t);

/// Step II: nodal averaging of the enhanced field into a continuous P2
/// field; nodes on the Dirichlet boundary are set to zero. For pure-traction
/// problems the averaged field is re-orthogonalized against the rigid modes.
void oswald_average(const Discretization& disc, MixedSolution& sol);

/// Runs Step I on every triangle followed by Step II.
void postprocess_displacement(const Discretization& disc, const Material& material,
                              MixedSolution& sol);

}  // namespace jmfem
