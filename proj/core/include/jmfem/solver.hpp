#pragma once

#include <string>

#include "jmfem/assembly.hpp"
#include "jmfem/solution.hpp"

namespace jmfem {

struct SolveReport {
  bool success = false;
  double rel_residual = 0.0;
  int n_total = 0;
  int n_free = 0;
  std::string method = "SparseLU";
};

/// Direct sparse factorization of the saddle system after symmetric
/// elimination of the essential traction dofs. Throws std::runtime_error on
/// a singular factorization or when the residual exceeds `tol`.
std::pair<MixedSolution, SolveReport> solve_saddle(const SaddleSystem& system,
                                                   double tol = 1e-10);

}  // namespace jmfem
