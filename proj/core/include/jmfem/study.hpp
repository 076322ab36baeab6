#pragma once

#include <string>
#include <vector>

#include "jmfem/benchmarks.hpp"
#include "jmfem/error_report.hpp"
#include "jmfem/solver.hpp"

namespace jmfem {

struct StudyConfig {
  std::string benchmark = "manufactured";  // manufactured | lshape | hole
  double E = 1.0;
  double nu = 0.3;
  int levels = 4;                     // uniform mode
  std::string mode = "uniform";       // uniform | adaptive
  std::string estimator = "hypercircle";  // hypercircle | incompressible | both
  double theta = 0.25;
  double tol = 1e-10;
  std::string out;      // CSV path; empty writes nothing
  std::string mesh_in;  // optional initial mesh file
  int budget = 50000;   // adaptive element budget
  int max_iterations = 25;
  int initial_n = 4;     // manufactured initial subdivision
  int hole_segments = 16;
};

Benchmark make_benchmark(const StudyConfig& config);

/// One assemble-solve-postprocess pass; the mesh stays owned by the caller.
struct PipelineResult {
  Discretization disc;
  MixedSolution solution;
  SolveReport report;
};
PipelineResult solve_pipeline(const MacroMesh& mesh, const Benchmark& bench, double tol = 1e-10);

/// Threshold marking: { K : value_K >= theta * max_K value_K }.
std::vector<int> mark(const std::vector<double>& values, double theta);

std::vector<ErrorReport> run_uniform(const StudyConfig& config);
std::vector<ErrorReport> run_adaptive(const StudyConfig& config);

/// Observed order in powers of h between consecutive levels, h ~ N^{-1/2}.
double observed_order_h(double e_prev, double e_next, int n_prev, int n_next);
/// Least-squares slope of log(error) against log(N) over the given window,
/// returned with the sign convention error ~ N^{-order}.
double lsq_order_in_N(const std::vector<double>& errors, const std::vector<int>& ns);

/// CSV output; uniform mode carries observed-order columns, adaptive mode
/// carries the estimator columns. Values are printed to six significant
/// digits; the first row's order cells stay empty.
void emit_table(const std::vector<ErrorReport>& reports, const std::string& mode,
                const std::string& path);
void emit_table(const std::vector<ErrorReport>& reports, const std::string& mode,
                std::ostream& out);

}  // namespace jmfem
