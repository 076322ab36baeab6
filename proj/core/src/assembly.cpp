#include "jmfem/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "jmfem/quadrature.hpp"

namespace jmfem {

namespace {

// Outward unit normal of the boundary edge as seen from its (unique)
// adjacent triangle; triangles are counterclockwise, so rotating the edge
// direction clockwise points outward.
Vec2 outward_normal(const MacroMesh& mesh, const Edge& e) {
  const int t = e.tri[0];
  const auto& tri = mesh.triangle(t);
  int la = -1, lb = -1;
  for (int k = 0; k < 3; ++k) {
    if (tri[k] == e.a) la = k;
    if (tri[k] == e.b) lb = k;
  }
  Vec2 d = mesh.vertex(e.b) - mesh.vertex(e.a);
  // Traversal order within the triangle: a then b means d already follows the
  // counterclockwise boundary; otherwise flip.
  if ((la + 1) % 3 != lb) d = -d;
  d.normalize();
  return {d.y(), -d.x()};
}

}  // namespace

SaddleSystem assemble(const Discretization& disc, const Material& material,
                      const VectorField& f, const TractionField& g) {
  const MacroMesh& mesh = *disc.mesh;
  const DofMap& dofs = disc.dofs;
  const int nt = mesh.num_triangles();

  SaddleSystem sys;
  sys.n_stress = dofs.n_stress;
  sys.n_disp = dofs.n_disp;
  sys.n_lambda = dofs.n_lambda;
  sys.rhs = Eigen::VectorXd::Zero(sys.total());

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(nt) * (15 * 15 + 2 * 15 * 6 + 40));

  const auto& rule = make_quadrature(4);
  const int disp_base = sys.n_stress;
  const int mult_base = sys.n_stress + sys.n_disp;

  for (int t = 0; t < nt; ++t) {
    const JMElementBasis& el = disc.bases[t];
    const P1Frame frame(el.split().vertex);

    Eigen::Matrix<double, 15, 15> A = Eigen::Matrix<double, 15, 15>::Zero();
    Eigen::Matrix<double, 6, 15> B = Eigen::Matrix<double, 6, 15>::Zero();
    Eigen::Matrix<double, 6, 1> load = Eigen::Matrix<double, 6, 1>::Zero();
    Eigen::Matrix<double, 3, 6> R = Eigen::Matrix<double, 3, 6>::Zero();

    for (int sub = 0; sub < 3; ++sub) {
      const auto sc = el.split().sub(sub);
      const double jac = 2.0 * triangle_area(sc[0], sc[1], sc[2]);

      std::array<Vec2, 15> divs;
      for (int i = 0; i < 15; ++i) divs[i] = el.div_basis(i, sub);

      for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto& l = rule.points[q];
        const Vec2 p = l[0] * sc[0] + l[1] * sc[1] + l[2] * sc[2];
        const double w = jac * rule.weights[q];

        std::array<SymTensor2, 15> tau;
        std::array<SymTensor2, 15> ctau;
        for (int i = 0; i < 15; ++i) {
          tau[i] = el.eval_basis(i, sub, p);
          ctau[i] = compliance_apply(material, tau[i]);
        }
        for (int i = 0; i < 15; ++i)
          for (int j = i; j < 15; ++j) {
            const double v = w * ddot(ctau[i], tau[j]);
            A(i, j) += v;
            if (j != i) A(j, i) += v;
          }

        const Eigen::Vector3d lam = frame.lambda(p);
        const Vec2 fp = f(p);
        for (int m = 0; m < 3; ++m) {
          for (int i = 0; i < 15; ++i) {
            B(2 * m + 0, i) += w * lam[m] * divs[i].x();
            B(2 * m + 1, i) += w * lam[m] * divs[i].y();
          }
          load[2 * m + 0] += w * lam[m] * fp.x();
          load[2 * m + 1] += w * lam[m] * fp.y();
        }
        if (sys.n_lambda > 0) {
          // Rigid modes (1,0), (0,1), (-y,x) against the displacement basis.
          for (int m = 0; m < 3; ++m) {
            R(0, 2 * m + 0) += w * lam[m];
            R(1, 2 * m + 1) += w * lam[m];
            R(2, 2 * m + 0) += w * lam[m] * (-p.y());
            R(2, 2 * m + 1) += w * lam[m] * p.x();
          }
        }
      }
    }

    const auto& sg = dofs.stress_global[t];
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j)
        if (A(i, j) != 0.0) trip.emplace_back(sg[i], sg[j], A(i, j));
    for (int m = 0; m < 6; ++m) {
      const int gd = disp_base + 6 * t + m;
      for (int i = 0; i < 15; ++i)
        if (B(m, i) != 0.0) {
          trip.emplace_back(gd, sg[i], B(m, i));
          trip.emplace_back(sg[i], gd, B(m, i));
        }
      sys.rhs[gd] = -load[m];
      if (sys.n_lambda > 0)
        for (int r = 0; r < 3; ++r)
          if (R(r, m) != 0.0) {
            trip.emplace_back(mult_base + r, gd, R(r, m));
            trip.emplace_back(gd, mult_base + r, R(r, m));
          }
    }
  }

  // Essential traction dofs on the tagged boundary: the four edge moments of
  // the data, expressed against the globally oriented edge functionals.
  for (int e : dofs.neumann_edges) {
    const Edge& edge = mesh.edge(e);
    const Vec2 A = mesh.vertex(edge.a), B = mesh.vertex(edge.b);
    const Vec2 t_ab = (B - A).normalized();
    const Vec2 n_func(t_ab.y(), -t_ab.x());
    const Vec2 n_out = outward_normal(mesh, edge);
    const double sign = n_func.dot(n_out) > 0.0 ? 1.0 : -1.0;
    const Eigen::Vector4d m =
        edge_traction_moments(A, B, [&](const Vec2& p) { return g(p, n_out); });
    for (int w = 0; w < 4; ++w) sys.essential.emplace_back(4 * e + w, sign * m[w]);
  }

  // Pure-traction data must not load the rigid modes.
  if (sys.n_lambda > 0) {
    Eigen::Vector3d residual = Eigen::Vector3d::Zero();
    double scale = 0.0;
    const auto& frule = make_quadrature(4);
    for (int t = 0; t < nt; ++t) {
      const auto c = mesh.triangle_coords(t);
      const double jac = 2.0 * mesh.area(t);
      for (std::size_t q = 0; q < frule.size(); ++q) {
        const auto& l = frule.points[q];
        const Vec2 p = l[0] * c[0] + l[1] * c[1] + l[2] * c[2];
        const Vec2 fp = f(p);
        const double w = jac * frule.weights[q];
        residual += w * Eigen::Vector3d(fp.x(), fp.y(), -p.y() * fp.x() + p.x() * fp.y());
        scale += w * fp.norm();
      }
    }
    const auto& erule = make_edge_quadrature(5);
    for (int e : dofs.neumann_edges) {
      const Edge& edge = mesh.edge(e);
      const Vec2 A = mesh.vertex(edge.a), B = mesh.vertex(edge.b);
      const Vec2 n_out = outward_normal(mesh, edge);
      const double len = (B - A).norm();
      for (std::size_t q = 0; q < erule.points.size(); ++q) {
        const Vec2 p = A + erule.points[q] * (B - A);
        const Vec2 gp = g(p, n_out);
        const double w = len * erule.weights[q];
        residual += w * Eigen::Vector3d(gp.x(), gp.y(), -p.y() * gp.x() + p.x() * gp.y());
        scale += w * gp.norm();
      }
    }
    if (residual.norm() > 1e-8 * std::max(scale, 1e-300))
      throw std::invalid_argument(
          "assemble: pure-traction data are incompatible with rigid-body equilibrium");
  }

  sys.matrix.resize(sys.total(), sys.total());
  sys.matrix.setFromTriplets(trip.begin(), trip.end());
  sys.matrix.makeCompressed();
  return sys;
}

}  // namespace jmfem
