// Command line driver for the mixed elasticity convergence studies.
//
//   jmfem --benchmark manufactured --nu 0.3 --levels 4 --out table.csv
//   jmfem --benchmark lshape --mode adaptive --estimator incompressible \
//         --nu 0.49999 --budget 20000 --out lshape.csv
//
// A key=value config file can seed any option (--config study.cfg);
// command line flags override the file.

#include <CLI11.hpp>
#include <iostream>

#include "jmfem/study.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Johnson-Mercier mixed FEM for plane elasticity"};
  app.set_config("--config", "", "key=value configuration file");

  jmfem::StudyConfig config;
  app.add_option("--benchmark", config.benchmark, "manufactured | lshape | hole")
      ->capture_default_str();
  app.add_option("--nu", config.nu, "Poisson ratio, in [0, 0.5)")->capture_default_str();
  app.add_option("--E", config.E, "Young's modulus")->capture_default_str();
  app.add_option("--levels", config.levels, "number of uniform refinement levels")
      ->capture_default_str();
  app.add_option("--mode", config.mode, "uniform | adaptive")->capture_default_str();
  app.add_option("--estimator", config.estimator, "hypercircle | incompressible | both")
      ->capture_default_str();
  app.add_option("--theta", config.theta, "marking threshold in (0,1]")->capture_default_str();
  app.add_option("--tol", config.tol, "linear solver residual tolerance")->capture_default_str();
  app.add_option("--out", config.out, "CSV output path");
  app.add_option("--mesh-in", config.mesh_in, "initial mesh file (text format)");
  app.add_option("--budget", config.budget, "adaptive element budget")->capture_default_str();
  app.add_option("--max-iterations", config.max_iterations, "adaptive iteration cap")
      ->capture_default_str();
  app.add_option("--initial-n", config.initial_n, "initial unit-square subdivision")
      ->capture_default_str();
  app.add_option("--segments", config.hole_segments, "hole polygon segments")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<jmfem::ErrorReport> reports;
    if (config.mode == "uniform")
      reports = jmfem::run_uniform(config);
    else if (config.mode == "adaptive")
      reports = jmfem::run_adaptive(config);
    else
      throw std::invalid_argument("unknown mode: " + config.mode);
    jmfem::emit_table(reports, config.mode, std::cout);
    return 0;
  } catch (const std::exception& err) {
    std::cerr << "jmfem: " << err.what() << '\n';
    return 1;
  }
}
