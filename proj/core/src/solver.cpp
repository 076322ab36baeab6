#include "jmfem/solver.hpp"

#include <Eigen/SparseLU>
#include <stdexcept>

namespace jmfem {

std::pair<MixedSolution, SolveReport> solve_saddle(const SaddleSystem& system, double tol) {
  if (!(tol > 0.0 && tol <= 1e-6))
    throw std::invalid_argument("solve_saddle: tol must lie in (0, 1e-6]");

  const int n = system.total();
  std::vector<char> fixed(n, 0);
  Eigen::VectorXd values = Eigen::VectorXd::Zero(n);
  for (const auto& [dof, value] : system.essential) {
    fixed[dof] = 1;
    values[dof] = value;
  }

  std::vector<int> to_free(n, -1);
  std::vector<int> free_dofs;
  free_dofs.reserve(n);
  for (int i = 0; i < n; ++i)
    if (!fixed[i]) {
      to_free[i] = static_cast<int>(free_dofs.size());
      free_dofs.push_back(i);
    }
  const int nf = static_cast<int>(free_dofs.size());

  // Symmetric elimination: drop fixed rows/columns, move known columns to
  // the right-hand side.
  Eigen::VectorXd rhs(nf);
  for (int i = 0; i < nf; ++i) rhs[i] = system.rhs[free_dofs[i]];
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(system.matrix.nonZeros());
  for (int col = 0; col < system.matrix.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(system.matrix, col); it; ++it) {
      const int i = static_cast<int>(it.row()), j = col;
      if (fixed[i]) continue;
      if (fixed[j])
        rhs[to_free[i]] -= it.value() * values[j];
      else
        trip.emplace_back(to_free[i], to_free[j], it.value());
    }
  Eigen::SparseMatrix<double> M(nf, nf);
  M.setFromTriplets(trip.begin(), trip.end());
  M.makeCompressed();

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.analyzePattern(M);
  lu.factorize(M);
  if (lu.info() != Eigen::Success)
    throw std::runtime_error("solve_saddle: factorization failed (singular system)");
  const Eigen::VectorXd x = lu.solve(rhs);
  if (lu.info() != Eigen::Success) throw std::runtime_error("solve_saddle: solve failed");

  SolveReport report;
  report.n_total = n;
  report.n_free = nf;
  const double bnorm = rhs.norm();
  report.rel_residual = (M * x - rhs).norm() / (bnorm > 0.0 ? bnorm : 1.0);
  report.success = report.rel_residual <= tol;
  if (!report.success)
    throw std::runtime_error("solve_saddle: residual " + std::to_string(report.rel_residual) +
                             " exceeds tolerance");

  Eigen::VectorXd full = values;
  for (int i = 0; i < nf; ++i) full[free_dofs[i]] = x[i];

  MixedSolution sol;
  sol.stress = full.head(system.n_stress);
  sol.displacement = full.segment(system.n_stress, system.n_disp);
  sol.pure_traction = system.n_lambda > 0;
  if (system.n_lambda == 3) sol.multipliers = full.tail(3);
  return {std::move(sol), report};
}

}  // namespace jmfem
