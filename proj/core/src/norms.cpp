#include "jmfem/norms.hpp"

#include <cmath>

#include "jmfem/quadrature.hpp"
#include "jmfem/solution.hpp"

namespace jmfem {

double integrate_local(const MacroMesh& mesh, int t, int order,
                       const std::function<double(int, const Vec2&)>& fn) {
  const auto& rule = make_quadrature(order);
  const MacroSplit split = barycentric_split(mesh, t);
  double sum = 0.0;
  for (int sub = 0; sub < 3; ++sub) {
    const auto sc = split.sub(sub);
    const double jac = 2.0 * triangle_area(sc[0], sc[1], sc[2]);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const Vec2 p = l[0] * sc[0] + l[1] * sc[1] + l[2] * sc[2];
      sum += jac * rule.weights[q] * fn(t, p);
    }
  }
  return sum;
}

double integrate(const MacroMesh& mesh, int order,
                 const std::function<double(int, const Vec2&)>& fn) {
  double sum = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) sum += integrate_local(mesh, t, order, fn);
  return sum;
}

double energy_norm(const Material& material, const TensorFieldFn& field, const MacroMesh& mesh,
                   int order) {
  const double sq = integrate(
      mesh, order, [&](int t, const Vec2& p) { return energy_density(material, field(t, p)); });
  return std::sqrt(std::max(0.0, sq));
}

double l2_norm(const TensorFieldFn& field, const MacroMesh& mesh, int order) {
  const double sq =
      integrate(mesh, order, [&](int t, const Vec2& p) { return field(t, p).frobenius_sq(); });
  return std::sqrt(std::max(0.0, sq));
}

double broken_h_norm(const MacroMesh& mesh, const Eigen::VectorXd& v) {
  double sq = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t)
    sq += mesh.area(t) * p1_strain(mesh, v, t).frobenius_sq();

  const auto& rule = make_edge_quadrature(3);
  auto value_on = [&](int t, const Vec2& p) { return displacement_at(mesh, v, t, p); };
  for (const auto& e : mesh.edges()) {
    const bool dirichlet = e.on_boundary() && e.tag == BoundaryTag::DirichletD;
    if (!e.on_boundary() || dirichlet) {
      const Vec2 A = mesh.vertex(e.a), B = mesh.vertex(e.b);
      const double len = (B - A).norm();
      double jump_sq = 0.0;
      for (std::size_t q = 0; q < rule.points.size(); ++q) {
        const Vec2 p = A + rule.points[q] * (B - A);
        Vec2 jump = value_on(e.tri[0], p);
        if (!dirichlet) jump -= value_on(e.tri[1], p);
        jump_sq += len * rule.weights[q] * jump.squaredNorm();
      }
      sq += jump_sq / len;
    }
  }
  return std::sqrt(sq);
}

}  // namespace jmfem
