#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "jmfem/mesh.hpp"
#include "jmfem/quadrature.hpp"
#include "jmfem/sym_tensor.hpp"

namespace jmfem {

/// Composite stress element on the barycentric 3-split of a macro triangle:
/// piecewise-linear symmetric tensors with traction continuity across the
/// three internal edges. The resulting 15-dimensional space is spanned by
/// fields dual to the 15 degrees of freedom
///   - per macro edge, the traction moments against the constant and the
///     signed linear weight, for each component (4 per edge, 12 total),
///   - the three interior moments against eps(v) for v in {(x,0),(0,y),(y,x)}.
/// Edge weights are oriented by global vertex index order, so a shared edge
/// carries identical functionals on both sides.
///
/// Each basis field is stored as 27 coefficients: per sub-triangle i and
/// component c in (xx, yy, xy), a linear polynomial in the locally scaled
/// frame xi = (x - barycenter) / scale.
class JMElementBasis {
 public:
  static constexpr int kDofs = 15;
  static constexpr int kCoeffs = 27;

  /// Local dof order: [edge0: cx cy lx ly][edge1: ...][edge2: ...][K: xx yy 2xy].
  static constexpr int edge_dof(int local_edge, int which) { return 4 * local_edge + which; }
  static constexpr int interior_dof(int which) { return 12 + which; }

  JMElementBasis() = default;

  const MacroSplit& split() const { return split_; }
  double scale() const { return scale_; }
  double condition_estimate() const { return cond_; }

  /// Index of the sub-triangle containing the point (tolerance-based).
  /// Throws std::domain_error if the point is outside the macro triangle.
  int locate_sub(const Vec2& p) const;

  /// Value of a single basis field on sub-triangle `sub` at `p`.
  SymTensor2 eval_basis(int dof, int sub, const Vec2& p) const;
  /// Value of the field with local coefficient vector `c` (size 15).
  SymTensor2 eval(const Eigen::Ref<const Eigen::Matrix<double, 15, 1>>& c, int sub,
                  const Vec2& p) const;
  SymTensor2 eval(const Eigen::Ref<const Eigen::Matrix<double, 15, 1>>& c, const Vec2& p) const {
    return eval(c, locate_sub(p), p);
  }

  /// Divergence of a basis field; constant per sub-triangle.
  Vec2 div_basis(int dof, int sub) const;
  Vec2 div(const Eigen::Ref<const Eigen::Matrix<double, 15, 1>>& c, int sub) const;

  /// Applies the 15 dof functionals to an arbitrary tensor field given as a
  /// callable Vec2 -> SymTensor2 (used for interpolation tests and data).
  template <class F>
  Eigen::Matrix<double, 15, 1> interpolate(F&& field) const;

  friend JMElementBasis build_jm_basis(const MacroMesh& mesh, int t);

 private:
  MacroSplit split_;
  Vec2 center_;
  double scale_ = 1.0;
  double cond_ = 0.0;
  // coeffs_(i, dof): 27 polynomial coefficients per basis field.
  Eigen::Matrix<double, kCoeffs, kDofs> coeffs_;
  // Oriented macro edge endpoints (lower global index first) per local edge.
  std::array<std::array<Vec2, 2>, 3> edge_pts_;
  std::array<Vec2, 3> edge_normal_;  // fixed global-orientation normal per local edge

  Eigen::Vector3d monomials(const Vec2& p) const {
    const Vec2 xi = (p - center_) / scale_;
    return {1.0, xi.x(), xi.y()};
  }
  SymTensor2 eval_coeffs(const Eigen::Ref<const Eigen::Matrix<double, kCoeffs, 1>>& c, int sub,
                         const Vec2& p) const;
};

/// Builds the basis directly on the physical triangle by solving the dense
/// 27x27 local system (12 internal traction-continuity rows + 15 dof rows).
/// Throws std::runtime_error when the local system's condition estimate
/// exceeds 1e12 (degenerate triangle).
JMElementBasis build_jm_basis(const MacroMesh& mesh, int t);

template <class F>
Eigen::Matrix<double, 15, 1> JMElementBasis::interpolate(F&& field) const {
  // Edge moments by 3-point Gauss (exact for P1 traction against P1 weight;
  // adequate for smooth data).
  Eigen::Matrix<double, 15, 1> dofs = Eigen::Matrix<double, 15, 1>::Zero();
  static const double gp[3] = {0.5 - 0.5 * std::sqrt(3.0 / 5.0), 0.5,
                               0.5 + 0.5 * std::sqrt(3.0 / 5.0)};
  static const double gw[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  for (int e = 0; e < 3; ++e) {
    const Vec2 A = edge_pts_[e][0], B = edge_pts_[e][1];
    const Vec2 n = edge_normal_[e];
    for (int q = 0; q < 3; ++q) {
      const Vec2 p = A + gp[q] * (B - A);
      const SymTensor2 tau = field(p);
      const Vec2 trac(tau.xx * n.x() + tau.xy * n.y(), tau.xy * n.x() + tau.yy * n.y());
      const double lin = 2.0 * gp[q] - 1.0;
      dofs[edge_dof(e, 0)] += gw[q] * trac.x();
      dofs[edge_dof(e, 1)] += gw[q] * trac.y();
      dofs[edge_dof(e, 2)] += gw[q] * trac.x() * lin;
      dofs[edge_dof(e, 3)] += gw[q] * trac.y() * lin;
    }
  }
  // Interior moments: area averages of (xx, yy, 2xy), degree-4 quadrature
  // per sub-triangle.
  const auto& rule = make_quadrature(4);
  const double area = triangle_area(split_.vertex[0], split_.vertex[1], split_.vertex[2]);
  for (int i = 0; i < 3; ++i) {
    const auto sub = split_.sub(i);
    const double sub_area = triangle_area(sub[0], sub[1], sub[2]);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const Vec2 p = l[0] * sub[0] + l[1] * sub[1] + l[2] * sub[2];
      const SymTensor2 tau = field(p);
      const double w = 2.0 * sub_area * rule.weights[q] / area;
      dofs[interior_dof(0)] += w * tau.xx;
      dofs[interior_dof(1)] += w * tau.yy;
      dofs[interior_dof(2)] += w * 2.0 * tau.xy;
    }
  }
  return dofs;
}

}  // namespace jmfem
