#include "jmfem/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "jmfem/estimators.hpp"
#include "jmfem/mesh_io.hpp"
#include "jmfem/postprocess.hpp"

namespace jmfem {

Benchmark make_benchmark(const StudyConfig& config) {
  Benchmark bench;
  if (config.benchmark == "manufactured")
    bench = make_manufactured_benchmark(config.E, config.nu, config.initial_n);
  else if (config.benchmark == "lshape")
    bench = make_lshape_benchmark(config.E, config.nu);
  else if (config.benchmark == "hole")
    bench = make_hole_benchmark(config.E, config.nu, 1.0, 4.0, 4.0, config.hole_segments);
  else
    throw std::invalid_argument("unknown benchmark: " + config.benchmark);
  if (!config.mesh_in.empty()) {
    const std::string path = config.mesh_in;
    bench.initial_mesh = [path]() { return load_mesh(path); };
  }
  return bench;
}

PipelineResult solve_pipeline(const MacroMesh& mesh, const Benchmark& bench, double tol) {
  PipelineResult r;
  r.disc = build_discretization(mesh);
  const SaddleSystem system = assemble(r.disc, bench.material, bench.body_load, bench.traction);
  auto [sol, rep] = solve_saddle(system, tol);
  r.solution = std::move(sol);
  r.report = rep;
  postprocess_displacement(r.disc, bench.material, r.solution);
  return r;
}

std::vector<int> mark(const std::vector<double>& values, double theta) {
  if (values.empty()) throw std::invalid_argument("mark: empty estimator array");
  if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("mark: theta must lie in (0,1]");
  const double vmax = *std::max_element(values.begin(), values.end());
  std::vector<int> marked;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] >= theta * vmax) marked.push_back(static_cast<int>(k));
  return marked;
}

std::vector<ErrorReport> run_uniform(const StudyConfig& config) {
  const Benchmark bench = make_benchmark(config);
  if (config.levels < 1) throw std::invalid_argument("run_uniform: levels must be >= 1");

  std::vector<ErrorReport> reports;
  MacroMesh mesh = bench.initial_mesh();
  for (int level = 0; level < config.levels; ++level) {
    const PipelineResult r = solve_pipeline(mesh, bench, config.tol);
    reports.push_back(exact_errors(r.disc, bench, r.solution));
    if (level + 1 == config.levels) break;
    // Two bisection sweeps halve the mesh size.
    for (int sweep = 0; sweep < 2; ++sweep) {
      std::vector<int> all(mesh.num_triangles());
      std::iota(all.begin(), all.end(), 0);
      mesh = refine(mesh, all);
    }
  }
  if (!config.out.empty()) emit_table(reports, "uniform", config.out);
  return reports;
}

std::vector<ErrorReport> run_adaptive(const StudyConfig& config) {
  const Benchmark bench = make_benchmark(config);
  std::vector<ErrorReport> reports;
  MacroMesh mesh = bench.initial_mesh();
  for (int it = 0; it < config.max_iterations; ++it) {
    const PipelineResult r = solve_pipeline(mesh, bench, config.tol);
    ErrorReport rep = exact_errors(r.disc, bench, r.solution);
    reports.push_back(rep);
    if (mesh.num_triangles() > config.budget) break;

    std::vector<int> marked;
    if (config.estimator == "hypercircle") {
      marked = mark(rep.eta_K, config.theta);
    } else if (config.estimator == "incompressible") {
      marked = mark(rep.eta_inc_K, config.theta);
    } else if (config.estimator == "both") {
      marked = mark(rep.eta_K, config.theta);
      const auto inc = mark(rep.eta_inc_K, config.theta);
      marked.insert(marked.end(), inc.begin(), inc.end());
      std::sort(marked.begin(), marked.end());
      marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    } else {
      throw std::invalid_argument("unknown estimator: " + config.estimator);
    }
    mesh = refine(mesh, marked);
  }
  if (!config.out.empty()) emit_table(reports, "adaptive", config.out);
  return reports;
}

double observed_order_h(double e_prev, double e_next, int n_prev, int n_next) {
  return std::log(e_prev / e_next) / std::log(std::sqrt(double(n_next) / double(n_prev)));
}

double lsq_order_in_N(const std::vector<double>& errors, const std::vector<int>& ns) {
  if (errors.size() != ns.size() || errors.size() < 2)
    throw std::invalid_argument("lsq_order_in_N: need >= 2 matching samples");
  const std::size_t n = errors.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(double(ns[i])), y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return -slope;
}

namespace {

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void emit_table(const std::vector<ErrorReport>& reports, const std::string& mode,
                std::ostream& out) {
  if (reports.empty()) throw std::invalid_argument("emit_table: no reports");
  out << "# observed orders oc are in powers of h, using h ~ N^(-1/2)\n";
  if (mode == "uniform") {
    out << "N,e0_sigma,oc,e0_u,oc,eC_sigma,oc,eC_Aeps,oc,e_mean,oc,c_eff\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const ErrorReport& r = reports[i];
      auto oc = [&](double cur, double prev) -> std::string {
        if (i == 0) return "";
        return fmt6(observed_order_h(prev, cur, reports[i - 1].N, r.N));
      };
      out << r.N << ',' << fmt6(r.e0_sigma) << ',' << oc(r.e0_sigma, reports[i ? i - 1 : 0].e0_sigma)
          << ',' << fmt6(r.e0_u) << ',' << oc(r.e0_u, reports[i ? i - 1 : 0].e0_u) << ','
          << fmt6(r.eC_sigma) << ',' << oc(r.eC_sigma, reports[i ? i - 1 : 0].eC_sigma) << ','
          << fmt6(r.eC_Aeps) << ',' << oc(r.eC_Aeps, reports[i ? i - 1 : 0].eC_Aeps) << ','
          << fmt6(r.e_mean) << ',' << oc(r.e_mean, reports[i ? i - 1 : 0].e_mean) << ','
          << fmt6(r.c_eff) << '\n';
    }
  } else if (mode == "adaptive") {
    out << "N,e0_sigma,eC_sigma,eC_Aeps,e_mean,eta,eta_inc,c_eff\n";
    for (const ErrorReport& r : reports)
      out << r.N << ',' << fmt6(r.e0_sigma) << ',' << fmt6(r.eC_sigma) << ',' << fmt6(r.eC_Aeps)
          << ',' << fmt6(r.e_mean) << ',' << fmt6(r.eta) << ',' << fmt6(r.eta_inc) << ','
          << fmt6(r.c_eff) << '\n';
  } else {
    throw std::invalid_argument("emit_table: unknown mode " + mode);
  }
}

void emit_table(const std::vector<ErrorReport>& reports, const std::string& mode,
                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_table: cannot open " + path);
  emit_table(reports, mode, out);
}

}  // namespace jmfem
