#pragma once

#include "jmfem/benchmarks.hpp"
#include "jmfem/error_report.hpp"
#include "jmfem/material.hpp"
#include "jmfem/solution.hpp"

namespace jmfem {

/// Local hypercircle contribution eta(K) = (1/2) ||sigma_h - A eps(u_h^a)||_{C,K}.
double hypercircle_local(const Discretization& disc, const Material& material,
                         const MixedSolution& sol, int t);

/// Local incompressibility-robust contribution
/// eta_inc(K) = mu^{1/2} ||C sigma_h - eps(u_h^a)||_{0,K}, so the squares sum
/// to the square of the global mu^{1/2} ||C sigma_h - eps(u_h^a)||_0.
double incompressible_local(const Discretization& disc, const Material& material,
                            const MixedSolution& sol, int t);

/// osc(f) = (sum_K h_K^2 ||f - P_K f||_{0,K}^2)^{1/2}, constant C = 1.
double oscillation_f(const MacroMesh& mesh, const VectorField& f, int order = 8);

/// osc(g) = (sum_{E in Gamma_N} h_E ||g - Q_E g||_{0,E}^2)^{1/2}, C = 1.
double oscillation_g(const MacroMesh& mesh, const TractionField& g);

/// Fills the complete per-level report against the benchmark's exact
/// solution. Requires the postprocessed fields.
ErrorReport exact_errors(const Discretization& disc, const Benchmark& bench,
                         const MixedSolution& sol);

/// Pointwise discrete equilibrium defect: relative size of
/// max |div sigma_h + proj f| over all sub-triangles, with proj the
/// moment-matching load projection. Vanishes to solver accuracy.
double equilibrium_residual(const Discretization& disc, const MixedSolution& sol,
                            const VectorField& f);

}  // namespace jmfem
