#pragma once

#include <vector>

namespace jmfem {

/// Per-refinement-level record of the error and estimator quantities.
/// Relative quantities follow the benchmark conventions: L2 and energy
/// errors are normalized by the corresponding norm of the exact stress, the
/// incompressible-scaled ones by mu^{-1/2} ||sigma||_0.
struct ErrorReport {
  int N = 0;  // number of macro elements

  double e0_sigma = 0.0;  // ||sigma - sigma_h||_0 / ||sigma||_0
  double e0_u = 0.0;      // ||eps(u) - eps(u_h^a)||_0 / ||eps(u)||_0
  double eC_sigma = 0.0;  // ||sigma - sigma_h||_C / ||sigma||_C
  double eC_Aeps = 0.0;   // ||sigma - A eps(u_h^a)||_C / ||sigma||_C
  double e_mean = 0.0;    // ||sigma - (sigma_h + A eps(u_h^a))/2||_C / ||sigma||_C
  double c_eff = 0.0;     // e_mean numerator / eta numerator
  double eta = 0.0;       // (1/2)||sigma_h - A eps(u_h^a)||_C / ||sigma||_C
  double eta_inc = 0.0;   // mu^{1/2}||C sigma_h - eps(u_h^a)||_0 / (mu^{-1/2}||sigma||_0)
  double e0_u_inc = 0.0;  // mu^{1/2}||eps(u)-eps(u_h^a)||_0 / (mu^{-1/2}||sigma||_0)

  double osc_f = 0.0;
  double osc_g = 0.0;

  double gap_ph_h = 0.0;    // ||P_h u - u_h||_h / ||eps(u)||_0
  double e_eps_raw = 0.0;   // elementwise ||eps(u) - eps(u_h)||_0 / ||eps(u)||_0

  std::vector<double> eta_K;      // local hypercircle contributions
  std::vector<double> eta_inc_K;  // local incompressible contributions

  // Absolute norms kept for identity cross-checks.
  double sigma_l2 = 0.0;
  double sigma_C = 0.0;
  double epsu_l2 = 0.0;
  double num_e_mean = 0.0;  // ||sigma - mean||_C
  double num_eta = 0.0;     // (1/2)||sigma_h - A eps(u_h^a)||_C
};

}  // namespace jmfem
