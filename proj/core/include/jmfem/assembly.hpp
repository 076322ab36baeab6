#pragma once

#include <Eigen/Sparse>
#include <functional>
#include <utility>
#include <vector>

#include "jmfem/discretization.hpp"
#include "jmfem/material.hpp"
#include "jmfem/projection.hpp"

namespace jmfem {

/// Traction data: g(point, outward unit normal).
using TractionField = std::function<Vec2(const Vec2&, const Vec2&)>;

/// Symmetric indefinite block system
///   [ A  B^T (R^T) ] [sigma ]   [ b_s ]
///   [ B  0   ...   ] [  u   ] = [ b_u ]
///   [(R) ...  0    ] [lambda]   [  0  ]
/// with A the compliance Gram matrix, B the (div ., .) pairing and R the
/// rigid-mode rows present only for pure-traction problems. Essential
/// traction dofs are kept in the matrix and listed with their prescribed
/// values; the solver eliminates them symmetrically.
struct SaddleSystem {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd rhs;
  std::vector<std::pair<int, double>> essential;
  int n_stress = 0;
  int n_disp = 0;
  int n_lambda = 0;

  int total() const { return n_stress + n_disp + n_lambda; }
};

/// Assembles the discrete mixed system for body load f and traction data g
/// on the tagged traction boundary. For pure-traction problems, throws
/// std::invalid_argument when the data violate rigid-body compatibility
/// beyond 1e-8 relative to the data scale.
SaddleSystem assemble(const Discretization& disc, const Material& material,
                      const VectorField& f, const TractionField& g);

}  // namespace jmfem
