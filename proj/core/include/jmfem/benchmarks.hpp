#pragma once

#include <functional>
#include <string>
#include <utility>

#include "jmfem/assembly.hpp"
#include "jmfem/material.hpp"
#include "jmfem/mesh.hpp"

namespace jmfem {

/// Benchmark problem: geometry. material, data, and (when available) the
/// exact solution evaluators used for error reporting.
struct Benchmark {
  std::string name;
  Material material;
  bool has_exact = false;
  bool pure_traction = false;

  std::function<MacroMesh()> initial_mesh;
  std::function<Vec2(const Vec2&)> exact_u;
  std::function<SymTensor2(const Vec2&)> exact_sigma;
  VectorField body_load;
  TractionField traction;  // g(point, outward normal)
};

double poisson_ratio(const Material& m);

/// Unstressed circular hole of radius a in an infinite plate under
/// unidirectional tension sigma_inf; polar-series solution about the origin.
std::pair<Vec2, SymTensor2> hole_exact(const Vec2& p, double a, double sigma_inf,
                                       const Material& m);

/// Singular corner solution on the rotated-L domain, exponent
/// alpha = 0.544483737 and generalized stress intensity Q = 0.543075579.
/// The angle is measured from the reentrant corner with the branch cut along
/// the slit direction (+x), so the evaluators are smooth inside the domain.
std::pair<Vec2, SymTensor2> lshape_exact(const Vec2& p, const Material& m);

/// Smooth manufactured solution on the unit square,
///   u = (sin(pi x) sin(pi y), x^2 y (1-y)),
/// which vanishes identically on the Dirichlet edge {x=0}; sigma = A eps(u)
/// and f = -div sigma in closed form.
Benchmark make_manufactured_benchmark(double E, double nu, int n = 4);

Benchmark make_lshape_benchmark(double E, double nu, double a = 1.0);

Benchmark make_hole_benchmark(double E, double nu, double a = 1.0, double b = 4.0, double w = 4.0,
                              int segments = 16, double sigma_inf = 1.0);

}  // namespace jmfem
