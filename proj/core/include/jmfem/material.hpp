#pragma once

#include <stdexcept>

#include "jmfem/sym_tensor.hpp"

namespace jmfem {

/// Isotropic plane-strain material given by the Lame pair (mu, lambda).
struct Material {
  double mu = 1.0;
  double lambda = 0.0;
};

/// Converts Young's modulus and Poisson ratio to the Lame pair,
///   lambda = E nu / ((1+nu)(1-2nu)),  mu = E / (2(1+nu)).
/// nu = 1/2 is rejected: the nearly incompressible regime is reached with
/// large finite lambda (e.g. nu = 0.49999).
inline Material material_from_engineering(double E, double nu) {
  if (!(E > 0.0)) throw std::invalid_argument("material_from_engineering: E must be positive");
  if (!(nu >= 0.0 && nu < 0.5))
    throw std::invalid_argument("material_from_engineering: nu must lie in [0, 0.5)");
  return {E / (2.0 * (1.0 + nu)), E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu))};
}

/// Compliance action, C tau = (1/2mu)(tau - lambda/(2mu+2lambda) tr(tau) I).
inline SymTensor2 compliance_apply(const Material& m, const SymTensor2& tau) {
  const double c = m.lambda / (2.0 * m.mu + 2.0 * m.lambda) * tau.trace();
  return SymTensor2{tau.xx - c, tau.yy - c, tau.xy} * (1.0 / (2.0 * m.mu));
}

/// Elasticity action, A eps = 2mu eps + lambda tr(eps) I.
inline SymTensor2 elasticity_apply(const Material& m, const SymTensor2& eps) {
  const double c = m.lambda * eps.trace();
  return {2.0 * m.mu * eps.xx + c, 2.0 * m.mu * eps.yy + c, 2.0 * m.mu * eps.xy};
}

/// Pointwise energy density (C tau) : tau, which equals
/// (1/2mu)|tau^D|^2 + (1/(2mu+2lambda)) tr(tau)^2.
inline double energy_density(const Material& m, const SymTensor2& tau) {
  return ddot(compliance_apply(m, tau), tau);
}

}  // namespace jmfem
