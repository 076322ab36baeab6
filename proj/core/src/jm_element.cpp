#include "jmfem/jm_element.hpp"

#include <cmath>
#include <stdexcept>

#include "jmfem/quadrature.hpp"

namespace jmfem {

namespace {

// Component/row contributions of the traction (tau n): component 0 picks
// xx*nx + xy*ny, component 1 picks yy*ny + xy*nx.
struct TracTerm {
  int comp;
  double factor;
};
std::array<TracTerm, 2> traction_terms(int component, const Vec2& n) {
  if (component == 0) return {{{0, n.x()}, {2, n.y()}}};
  return {{{1, n.y()}, {2, n.x()}}};
}

}  // namespace

SymTensor2 JMElementBasis::eval_coeffs(
    const Eigen::Ref<const Eigen::Matrix<double, kCoeffs, 1>>& c, int sub, const Vec2& p) const {
  const Eigen::Vector3d m = monomials(p);
  SymTensor2 out;
  out.xx = c.segment<3>(9 * sub + 0).dot(m);
  out.yy = c.segment<3>(9 * sub + 3).dot(m);
  out.xy = c.segment<3>(9 * sub + 6).dot(m);
  return out;
}

int JMElementBasis::locate_sub(const Vec2& p) const {
  int best = -1;
  double best_min = -std::numeric_limits<double>::max();
  for (int i = 0; i < 3; ++i) {
    const auto s = split_.sub(i);
    const double A = triangle_area(s[0], s[1], s[2]);
    const double l0 = triangle_area(p, s[1], s[2]) / A;
    const double l1 = triangle_area(s[0], p, s[2]) / A;
    const double l2 = triangle_area(s[0], s[1], p) / A;
    const double mn = std::min({l0, l1, l2});
    if (mn > best_min) {
      best_min = mn;
      best = i;
    }
  }
  if (best_min < -1e-10)
    throw std::domain_error("JMElementBasis: point outside the macro triangle");
  return best;
}

SymTensor2 JMElementBasis::eval_basis(int dof, int sub, const Vec2& p) const {
  return eval_coeffs(coeffs_.col(dof), sub, p);
}

SymTensor2 JMElementBasis::eval(const Eigen::Ref<const Eigen::Matrix<double, 15, 1>>& c, int sub,
                                const Vec2& p) const {
  const Eigen::Matrix<double, kCoeffs, 1> combined = coeffs_ * c;
  return eval_coeffs(combined, sub, p);
}

Vec2 JMElementBasis::div_basis(int dof, int sub) const {
  const auto& c = coeffs_;
  // d/dx of xi_x is 1/scale.
  return Vec2(c(9 * sub + 1, dof) + c(9 * sub + 8, dof),
              c(9 * sub + 7, dof) + c(9 * sub + 5, dof)) /
         scale_;
}

Vec2 JMElementBasis::div(const Eigen::Ref<const Eigen::Matrix<double, 15, 1>>& c, int sub) const {
  Vec2 out = Vec2::Zero();
  for (int d = 0; d < kDofs; ++d) out += c[d] * div_basis(d, sub);
  return out;
}

JMElementBasis build_jm_basis(const MacroMesh& mesh, int t) {
  JMElementBasis el;
  el.split_ = barycentric_split(mesh, t);
  el.center_ = el.split_.barycenter;
  el.scale_ = mesh.diameter(t);

  const auto& tri = mesh.triangle(t);
  for (int e = 0; e < 3; ++e) {
    int ga = tri[(e + 1) % 3], gb = tri[(e + 2) % 3];
    if (ga > gb) std::swap(ga, gb);
    el.edge_pts_[e] = {mesh.vertex(ga), mesh.vertex(gb)};
    const Vec2 tang = (el.edge_pts_[e][1] - el.edge_pts_[e][0]).normalized();
    el.edge_normal_[e] = Vec2(tang.y(), -tang.x());
  }

  Eigen::Matrix<double, 27, 27> M = Eigen::Matrix<double, 27, 27>::Zero();
  int row = 0;

  // 12 rows: traction continuity across internal edges, enforced at the two
  // endpoints (tractions are linear along the edge).
  for (int i = 0; i < 3; ++i) {
    const auto [p0, p1] = el.split_.internal_edge(i);
    const Vec2 tang = (p1 - p0).normalized();
    const Vec2 n(tang.y(), -tang.x());
    const int sa = (i + 1) % 3, sb = (i + 2) % 3;
    for (const Vec2& p : {p0, p1}) {
      const Eigen::Vector3d mono = el.monomials(p);
      for (int comp = 0; comp < 2; ++comp) {
        for (const auto& term : traction_terms(comp, n)) {
          M.block<1, 3>(row, 9 * sa + 3 * term.comp) += term.factor * mono.transpose();
          M.block<1, 3>(row, 9 * sb + 3 * term.comp) -= term.factor * mono.transpose();
        }
        ++row;
      }
    }
  }

  // 12 rows: edge moment functionals (1/|E|) int_E (tau n) . w, with
  // w in {e_x, e_y} x {1, q} and q the signed linear weight.
  static const double gp[3] = {0.5 - 0.5 * std::sqrt(3.0 / 5.0), 0.5,
                               0.5 + 0.5 * std::sqrt(3.0 / 5.0)};
  static const double gw[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  for (int e = 0; e < 3; ++e) {
    const Vec2 A = el.edge_pts_[e][0], B = el.edge_pts_[e][1];
    const Vec2 n = el.edge_normal_[e];
    for (int which = 0; which < 4; ++which) {
      const int comp = which % 2;
      const bool linear = which >= 2;
      for (int q = 0; q < 3; ++q) {
        const Vec2 p = A + gp[q] * (B - A);
        const double weight = gw[q] * (linear ? 2.0 * gp[q] - 1.0 : 1.0);
        const Eigen::Vector3d mono = el.monomials(p);
        for (const auto& term : traction_terms(comp, n))
          M.block<1, 3>(row, 9 * e + 3 * term.comp) += weight * term.factor * mono.transpose();
      }
      ++row;
    }
  }

  // 3 rows: interior moments (1/|K|) int_K tau : eps(v) for
  // v in {(x,0), (0,y), (y,x)}, i.e. area averages of (xx, yy, 2xy).
  const auto& rule = make_quadrature(2);
  const double area = mesh.area(t);
  for (int which = 0; which < 3; ++which) {
    const double sel[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
    for (int i = 0; i < 3; ++i) {
      const auto sub = el.split_.sub(i);
      const double sub_area = triangle_area(sub[0], sub[1], sub[2]);
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto& l = rule.points[q];
        const Vec2 p = l[0] * sub[0] + l[1] * sub[1] + l[2] * sub[2];
        const double w = 2.0 * sub_area * rule.weights[q] / area;
        const Eigen::Vector3d mono = el.monomials(p);
        for (int comp = 0; comp < 3; ++comp)
          if (sel[which][comp] != 0.0)
            M.block<1, 3>(row, 9 * i + 3 * comp) += w * sel[which][comp] * mono.transpose();
      }
    }
    ++row;
  }

  Eigen::Matrix<double, 27, 15> rhs = Eigen::Matrix<double, 27, 15>::Zero();
  rhs.block<15, 15>(12, 0).setIdentity();

  Eigen::PartialPivLU<Eigen::Matrix<double, 27, 27>> lu(M);
  const double rcond = lu.rcond();
  el.cond_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(el.cond_ < 1e12))
    throw std::runtime_error("build_jm_basis: local system ill-conditioned (degenerate triangle " +
                             std::to_string(t) + ")");
  el.coeffs_ = lu.solve(rhs);
  return el;
}

}  // namespace jmfem
