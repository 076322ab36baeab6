#include "jmfem/benchmarks.hpp"

#include <cmath>
#include <stdexcept>

#include "jmfem/mesh_generators.hpp"

namespace jmfem {

double poisson_ratio(const Material& m) { return m.lambda / (2.0 * (m.lambda + m.mu)); }

std::pair<Vec2, SymTensor2> hole_exact(const Vec2& p, double a, double sigma_inf,
                                       const Material& m) {
  const double r = p.norm();
  if (r < a * (1.0 - 1e-12)) throw std::domain_error("hole_exact: point inside the hole");
  const double th = std::atan2(p.y(), p.x());
  const double kappa = 3.0 - 4.0 * poisson_ratio(m);
  const double ar = a / r, ar2 = ar * ar, ar3 = ar2 * ar, ar4 = ar2 * ar2;

  Vec2 u;
  u.x() = sigma_inf * a / (8.0 * m.mu) *
          ((r / a) * (kappa + 1.0) * std::cos(th) +
           2.0 * ar * ((1.0 + kappa) * std::cos(th) + std::cos(3.0 * th)) -
           2.0 * ar3 * std::cos(3.0 * th));
  u.y() = sigma_inf * a / (8.0 * m.mu) *
          ((r / a) * (kappa - 3.0) * std::sin(th) +
           2.0 * ar * ((1.0 - kappa) * std::sin(th) + std::sin(3.0 * th)) -
           2.0 * ar3 * std::sin(3.0 * th));

  const double c2 = std::cos(2.0 * th), c4 = std::cos(4.0 * th);
  const double s2 = std::sin(2.0 * th), s4 = std::sin(4.0 * th);
  SymTensor2 sig;
  sig.xx = sigma_inf * (1.0 - ar2 * (1.5 * c2 + c4) + 1.5 * ar4 * c4);
  sig.yy = sigma_inf * (-ar2 * (0.5 * c2 - c4) - 1.5 * ar4 * c4);
  sig.xy = sigma_inf * (-ar2 * (0.5 * s2 + s4) + 1.5 * ar4 * s4);
  return {u, sig};
}

std::pair<Vec2, SymTensor2> lshape_exact(const Vec2& p, const Material& m) {
  constexpr double alpha = 0.544483737;
  constexpr double Q = 0.543075579;
  const double r = p.norm();
  if (r == 0.0) throw std::domain_error("lshape_exact: singular point");
  // Angle from the corner bisector; the atan2 branch cut coincides with the
  // slit, so theta is continuous on the domain. The series frame is rotated
  // by pi against the physical frame: tensors carry over unchanged while the
  // displacement components change sign.
  const double th = std::atan2(-p.y(), -p.x());
  const double kappa = 3.0 - 4.0 * poisson_ratio(m);
  const double ra = std::pow(r, alpha);

  Vec2 u;
  u.x() = -1.0 / (2.0 * m.mu) * ra *
          ((kappa - Q * (alpha + 1.0)) * std::cos(alpha * th) -
           alpha * std::cos((alpha - 2.0) * th));
  u.y() = -1.0 / (2.0 * m.mu) * ra *
          ((kappa + Q * (alpha + 1.0)) * std::sin(alpha * th) +
           alpha * std::sin((alpha - 2.0) * th));

  const double s = alpha * std::pow(r, alpha - 1.0);
  SymTensor2 sig;
  sig.xx = s * ((2.0 - Q * (alpha + 1.0)) * std::cos((alpha - 1.0) * th) -
                (alpha - 1.0) * std::cos((alpha - 3.0) * th));
  sig.yy = s * ((2.0 + Q * (alpha + 1.0)) * std::cos((alpha - 1.0) * th) +
                (alpha - 1.0) * std::cos((alpha - 3.0) * th));
  sig.xy = s * ((alpha - 1.0) * std::sin((alpha - 3.0) * th) +
                Q * (alpha + 1.0) * std::sin((alpha - 1.0) * th));
  return {u, sig};
}

Benchmark make_manufactured_benchmark(double E, double nu, int n) {
  Benchmark b;
  b.name = "manufactured";
  b.material = material_from_engineering(E, nu);
  b.has_exact = true;
  b.pure_traction = false;
  b.initial_mesh = [n]() {
    return generate_unit_square(n, BoundaryTag::DirichletD, BoundaryTag::TractionN);
  };

  const double mu = b.material.mu, lam = b.material.lambda;
  const double pi = M_PI;

  auto eps = [pi](const Vec2& p) -> SymTensor2 {
    const double x = p.x(), y = p.y();
    return {pi * std::cos(pi * x) * std::sin(pi * y), x * x * (1.0 - 2.0 * y),
            0.5 * (pi * std::sin(pi * x) * std::cos(pi * y) + 2.0 * x * y * (1.0 - y))};
  };
  b.exact_u = [pi](const Vec2& p) -> Vec2 {
    const double x = p.x(), y = p.y();
    return {std::sin(pi * x) * std::sin(pi * y), x * x * y * (1.0 - y)};
  };
  Material mat = b.material;
  b.exact_sigma = [mat, eps](const Vec2& p) { return elasticity_apply(mat, eps(p)); };
  b.body_load = [mu, lam, pi](const Vec2& p) -> Vec2 {
    const double x = p.x(), y = p.y();
    const double ss = std::sin(pi * x) * std::sin(pi * y);
    const double cc = std::cos(pi * x) * std::cos(pi * y);
    return {(3.0 * mu + lam) * pi * pi * ss - 2.0 * (lam + mu) * x * (1.0 - 2.0 * y),
            -(mu + lam) * pi * pi * cc - 2.0 * mu * y * (1.0 - y) + (4.0 * mu + 2.0 * lam) * x * x};
  };
  auto sigma = b.exact_sigma;
  b.traction = [sigma](const Vec2& p, const Vec2& nrm) -> Vec2 {
    const SymTensor2 s = sigma(p);
    return {s.xx * nrm.x() + s.xy * nrm.y(), s.xy * nrm.x() + s.yy * nrm.y()};
  };
  return b;
}

namespace {

TractionField traction_from(const std::function<SymTensor2(const Vec2&)>& sigma) {
  return [sigma](const Vec2& p, const Vec2& nrm) -> Vec2 {
    const SymTensor2 s = sigma(p);
    return {s.xx * nrm.x() + s.xy * nrm.y(), s.xy * nrm.x() + s.yy * nrm.y()};
  };
}

}  // namespace

Benchmark make_lshape_benchmark(double E, double nu, double a) {
  Benchmark b;
  b.name = "lshape";
  b.material = material_from_engineering(E, nu);
  b.has_exact = true;
  b.pure_traction = true;
  b.initial_mesh = [a]() { return generate_lshape(a); };
  Material mat = b.material;
  b.exact_u = [mat](const Vec2& p) { return lshape_exact(p, mat).first; };
  b.exact_sigma = [mat](const Vec2& p) { return lshape_exact(p, mat).second; };
  b.body_load = [](const Vec2&) { return Vec2::Zero(); };
  b.traction = traction_from(b.exact_sigma);
  return b;
}

Benchmark make_hole_benchmark(double E, double nu, double a, double b_half, double w_half,
                              int segments, double sigma_inf) {
  Benchmark b;
  b.name = "hole";
  b.material = material_from_engineering(E, nu);
  b.has_exact = true;
  b.pure_traction = true;
  b.initial_mesh = [a, b_half, w_half, segments]() {
    return generate_plate_with_hole(a, b_half, w_half, segments);
  };
  Material mat = b.material;
  b.exact_u = [mat, a, sigma_inf](const Vec2& p) { return hole_exact(p, a, sigma_inf, mat).first; };
  b.exact_sigma = [mat, a, sigma_inf](const Vec2& p) {
    return hole_exact(p, a, sigma_inf, mat).second;
  };
  b.body_load = [](const Vec2&) { return Vec2::Zero(); };
  b.traction = traction_from(b.exact_sigma);
  return b;
}

}  // namespace jmfem
