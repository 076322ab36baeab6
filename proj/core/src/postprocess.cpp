#include "jmfem/postprocess.hpp"

#include <stdexcept>

#include "jmfem/quadrature.hpp"

namespace jmfem {

Vec2 p2_value(const P1Frame& frame, const Eigen::Matrix<double, 12, 1>& nodal, const Vec2& p) {
  const auto v = p2_values(frame.lambda(p));
  Vec2 out = Vec2::Zero();
  for (int i = 0; i < 6; ++i) out += v[i] * Vec2(nodal[2 * i], nodal[2 * i + 1]);
  return out;
}

SymTensor2 p2_strain(const P1Frame& frame, const Eigen::Matrix<double, 12, 1>& nodal,
                     const Vec2& p) {
  const auto g = p2_gradients(frame, frame.lambda(p));
  double gxx = 0, gyy = 0, gxy = 0, gyx = 0;
  for (int i = 0; i < 6; ++i) {
    const Vec2 u(nodal[2 * i], nodal[2 * i + 1]);
    gxx += u.x() * g[i].x();
    gxy += u.x() * g[i].y();
    gyx += u.y() * g[i].x();
    gyy += u.y() * g[i].y();
  }
  return {gxx, gyy, 0.5 * (gxy + gyx)};
}

Eigen::Matrix<double, 12, 1> averaged_local(const MacroMesh& mesh, const MixedSolution& sol,
                                            int t) {
  Eigen::Matrix<double, 12, 1> nodal;
  const auto& tri = mesh.triangle(t);
  for (int i = 0; i < 3; ++i) {
    nodal[2 * i] = sol.avg_vertex[2 * tri[i]];
    nodal[2 * i + 1] = sol.avg_vertex[2 * tri[i] + 1];
  }
  for (int i = 0; i < 3; ++i) {
    const int e = mesh.tri_edge(t, i);
    nodal[6 + 2 * i] = sol.avg_midpoint[2 * e];
    nodal[6 + 2 * i + 1] = sol.avg_midpoint[2 * e + 1];
  }
  return nodal;
}

Eigen::Matrix<double, 12, 1> enhance_local(const Discretization& disc, const Material& material,
                                           const MixedSolution& sol, int t) {
  const JMElementBasis& el = disc.bases[t];
  const P1Frame frame(el.split().vertex);
  const auto& rule = make_quadrature(4);

  // The projection onto P1 adapted to the composite element matches the
  // sub-triangle averages; the projection constraint P u* = u_h therefore
  // reads: averages of u* over the K_i equal those of u_h. The strain rows
  // test against (I - P)(b_i e_c) with the edge bubbles b_i, which span the
  // complement of P1 in P2.
  const Eigen::Matrix3d avg = submean_matrix();

  // Sub-triangle averages of the bubbles b_i = 4 l_{i+1} l_{i+2} and the
  // induced P1 representatives (barycentric coefficients of P b_i).
  Eigen::Matrix3d bubble_means = Eigen::Matrix3d::Zero();  // (bubble i, sub k)
  for (int k = 0; k < 3; ++k) {
    const auto sub = el.split().sub(k);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const Vec2 p = l[0] * sub[0] + l[1] * sub[1] + l[2] * sub[2];
      const Eigen::Vector3d lam = frame.lambda(p);
      for (int i = 0; i < 3; ++i)
        bubble_means(i, k) += 2.0 * rule.weights[q] * 4.0 * lam[(i + 1) % 3] * lam[(i + 2) % 3];
    }
  }
  // avg * nodal = means  =>  nodal coefficients of P b_i per bubble.
  const Eigen::Matrix3d bubble_p1 =
      (submean_matrix_inverse() * bubble_means.transpose()).transpose();

  Eigen::Matrix<double, 12, 12> M = Eigen::Matrix<double, 12, 12>::Zero();
  Eigen::Matrix<double, 12, 1> rhs = Eigen::Matrix<double, 12, 1>::Zero();

  // Constraint rows: average of u* over K_k equals the average of u_h.
  for (int k = 0; k < 3; ++k) {
    const auto sub = el.split().sub(k);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const Vec2 p = l[0] * sub[0] + l[1] * sub[1] + l[2] * sub[2];
      const Eigen::Vector3d lam = frame.lambda(p);
      const auto p2v = p2_values(lam);
      const double w = 2.0 * rule.weights[q];
      for (int c = 0; c < 2; ++c)
        for (int j = 0; j < 6; ++j) M(2 * k + c, 2 * j + c) += w * p2v[j];
    }
    for (int c = 0; c < 2; ++c) {
      double mean = 0.0;
      for (int i = 0; i < 3; ++i) mean += avg(k, i) * sol.displacement[6 * t + 2 * i + c];
      rhs[2 * k + c] = mean;
    }
  }

  // Strain Gram rows on the macro triangle; polynomial integrands, order 4
  // is exact.
  const auto coords = frame.coords;
  const double jac = 2.0 * frame.area;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto& l = rule.points[q];
    const Vec2 p = l[0] * coords[0] + l[1] * coords[1] + l[2] * coords[2];
    const Eigen::Vector3d lam = frame.lambda(p);
    const double w = jac * rule.weights[q];
    const auto p2g = p2_gradients(frame, lam);

    for (int i = 0; i < 3; ++i) {
      Vec2 gbub = 4.0 * (lam[(i + 2) % 3] * frame.grad[(i + 1) % 3] +
                         lam[(i + 1) % 3] * frame.grad[(i + 2) % 3]);
      for (int j = 0; j < 3; ++j) gbub -= bubble_p1(i, j) * frame.grad[j];
      for (int c = 0; c < 2; ++c) {
        const int row = 6 + 2 * i + c;
        SymTensor2 ev;  // eps of the test field, bubble gradient in component c
        if (c == 0)
          ev = {gbub.x(), 0.0, 0.5 * gbub.y()};
        else
          ev = {0.0, gbub.y(), 0.5 * gbub.x()};
        for (int j = 0; j < 6; ++j)
          for (int cc = 0; cc < 2; ++cc) {
            SymTensor2 eu;
            if (cc == 0)
              eu = {p2g[j].x(), 0.0, 0.5 * p2g[j].y()};
            else
              eu = {0.0, p2g[j].y(), 0.5 * p2g[j].x()};
            M(row, 2 * j + cc) += w * ddot(eu, ev);
          }
      }
    }
  }

  // Right-hand side of the strain rows: (C sigma_h, eps(v))_K integrated per
  // sub-triangle since sigma_h is only piecewise linear.
  const auto local = local_stress(disc, sol.stress, t);
  for (int sub = 0; sub < 3; ++sub) {
    const auto sc = el.split().sub(sub);
    const double sjac = 2.0 * triangle_area(sc[0], sc[1], sc[2]);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const Vec2 p = l[0] * sc[0] + l[1] * sc[1] + l[2] * sc[2];
      const double w = sjac * rule.weights[q];
      const SymTensor2 cs = compliance_apply(material, el.eval(local, sub, p));
      const Eigen::Vector3d lam = frame.lambda(p);
      for (int i = 0; i < 3; ++i) {
        Vec2 gbub = 4.0 * (lam[(i + 2) % 3] * frame.grad[(i + 1) % 3] +
                           lam[(i + 1) % 3] * frame.grad[(i + 2) % 3]);
        for (int j = 0; j < 3; ++j) gbub -= bubble_p1(i, j) * frame.grad[j];
        for (int c = 0; c < 2; ++c) {
          SymTensor2 ev;
          if (c == 0)
            ev = {gbub.x(), 0.0, 0.5 * gbub.y()};
          else
            ev = {0.0, gbub.y(), 0.5 * gbub.x()};
          rhs[6 + 2 * i + c] += w * ddot(cs, ev);
        }
      }
    }
  }

  Eigen::PartialPivLU<Eigen::Matrix<double, 12, 12>> lu(M);
  if (!(1.0 / lu.rcond() < 1e12))
    throw std::runtime_error("enhance_local: singular local system on triangle " +
                             std::to_string(t));
  return lu.solve(rhs);
}

void oswald_average(const Discretization& disc, MixedSolution& sol) {
  const MacroMesh& mesh = *disc.mesh;
  const int nv = mesh.num_vertices();
  const int ne = mesh.num_edges();

  Eigen::VectorXd vsum = Eigen::VectorXd::Zero(2 * nv), msum = Eigen::VectorXd::Zero(2 * ne);
  Eigen::VectorXd vcnt = Eigen::VectorXd::Zero(nv), mcnt = Eigen::VectorXd::Zero(ne);

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangle(t);
    for (int i = 0; i < 3; ++i) {
      vsum.segment<2>(2 * tri[i]) += sol.enhanced.segment<2>(12 * t + 2 * i);
      vcnt[tri[i]] += 1.0;
      const int e = mesh.tri_edge(t, i);
      msum.segment<2>(2 * e) += sol.enhanced.segment<2>(12 * t + 6 + 2 * i);
      mcnt[e] += 1.0;
    }
  }
  sol.avg_vertex.resize(2 * nv);
  sol.avg_midpoint.resize(2 * ne);
  for (int v = 0; v < nv; ++v) sol.avg_vertex.segment<2>(2 * v) = vsum.segment<2>(2 * v) / vcnt[v];
  for (int e = 0; e < ne; ++e)
    sol.avg_midpoint.segment<2>(2 * e) = msum.segment<2>(2 * e) / mcnt[e];

  // Kinematic admissibility: the averaged field vanishes on the Dirichlet
  // part of the boundary.
  for (int e = 0; e < ne; ++e) {
    const Edge& edge = mesh.edge(e);
    if (!edge.on_boundary() || edge.tag != BoundaryTag::DirichletD) continue;
    sol.avg_midpoint.segment<2>(2 * e).setZero();
    sol.avg_vertex.segment<2>(2 * edge.a).setZero();
    sol.avg_vertex.segment<2>(2 * edge.b).setZero();
  }

  // Pure traction: remove the rigid-mode components so the field matches the
  // normalization of the discrete solution.
  if (sol.pure_traction) {
    const auto& rule = make_quadrature(4);
    Eigen::Matrix3d G = Eigen::Matrix3d::Zero();
    Eigen::Vector3d b = Eigen::Vector3d::Zero();
    for (int t = 0; t < mesh.num_triangles(); ++t) {
      const P1Frame frame(mesh.triangle_coords(t));
      const auto nodal = averaged_local(mesh, sol, t);
      const double jac = 2.0 * frame.area;
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto& l = rule.points[q];
        const Vec2 p = l[0] * frame.coords[0] + l[1] * frame.coords[1] + l[2] * frame.coords[2];
        const double w = jac * rule.weights[q];
        const Vec2 u = p2_value(frame, nodal, p);
        const Eigen::Vector3d r[2] = {{1.0, 0.0, -p.y()}, {0.0, 1.0, p.x()}};
        for (int m = 0; m < 3; ++m) {
          b[m] += w * (r[0][m] * u.x() + r[1][m] * u.y());
          for (int k = 0; k < 3; ++k)
            G(m, k) += w * (r[0][m] * r[0][k] + r[1][m] * r[1][k]);
        }
      }
    }
    const Eigen::Vector3d c = G.ldlt().solve(b);
    for (int v = 0; v < nv; ++v) {
      const Vec2 p = mesh.vertex(v);
      sol.avg_vertex[2 * v] -= c[0] - c[2] * p.y();
      sol.avg_vertex[2 * v + 1] -= c[1] + c[2] * p.x();
    }
    for (int e = 0; e < ne; ++e) {
      const Vec2 p = 0.5 * (mesh.vertex(mesh.edge(e).a) + mesh.vertex(mesh.edge(e).b));
      sol.avg_midpoint[2 * e] -= c[0] - c[2] * p.y();
      sol.avg_midpoint[2 * e + 1] -= c[1] + c[2] * p.x();
    }
  }
  sol.has_postprocessed = true;
}

void postprocess_displacement(const Discretization& disc, const Material& material,
                              MixedSolution& sol) {
  const int nt = disc.mesh->num_triangles();
  sol.enhanced.resize(12 * nt);
  for (int t = 0; t < nt; ++t) sol.enhanced.segment<12>(12 * t) = enhance_local(disc, material, sol, t);
  oswald_average(disc, sol);
}

}  // namespace jmfem
