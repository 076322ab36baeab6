#include "jmfem/projection.hpp"

#include "jmfem/quadrature.hpp"

namespace jmfem {

P1Frame::P1Frame(const std::array<Vec2, 3>& v) : coords(v) {
  area = triangle_area(v[0], v[1], v[2]);
  // grad lambda_i = rot(v_{i+2} - v_{i+1}) / (2 area), rot = 90 deg ccw of the
  // opposite edge gives the inward normal direction scaled by edge length.
  for (int i = 0; i < 3; ++i) {
    const Vec2 e = v[(i + 2) % 3] - v[(i + 1) % 3];
    grad[i] = Vec2(-e.y(), e.x()) / (2.0 * area);
  }
}

Eigen::Vector3d P1Frame::lambda(const Vec2& p) const {
  const double l0 = triangle_area(p, coords[1], coords[2]) / area;
  const double l1 = triangle_area(coords[0], p, coords[2]) / area;
  return {l0, l1, 1.0 - l0 - l1};
}

Eigen::Matrix<double, 6, 1> p2_values(const Eigen::Vector3d& l) {
  Eigen::Matrix<double, 6, 1> v;
  for (int i = 0; i < 3; ++i) v[i] = l[i] * (2.0 * l[i] - 1.0);
  for (int i = 0; i < 3; ++i) v[3 + i] = 4.0 * l[(i + 1) % 3] * l[(i + 2) % 3];
  return v;
}

std::array<Vec2, 6> p2_gradients(const P1Frame& frame, const Eigen::Vector3d& l) {
  std::array<Vec2, 6> g;
  for (int i = 0; i < 3; ++i) g[i] = (4.0 * l[i] - 1.0) * frame.grad[i];
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    g[3 + i] = 4.0 * (l[b] * frame.grad[a] + l[a] * frame.grad[b]);
  }
  return g;
}

Eigen::Matrix<double, 6, 1> project_p1_local(const MacroMesh& mesh, int t, const VectorField& f,
                                             int order) {
  const MacroSplit split = barycentric_split(mesh, t);
  const P1Frame frame(split.vertex);
  const auto& rule = make_quadrature(order);

  // Scalar P1 mass matrix on the macro triangle (exact closed form).
  Eigen::Matrix3d M;
  const double area = frame.area;
  M << area / 6.0, area / 12.0, area / 12.0, area / 12.0, area / 6.0, area / 12.0, area / 12.0,
      area / 12.0, area / 6.0;

  Eigen::Matrix<double, 3, 2> b = Eigen::Matrix<double, 3, 2>::Zero();
  for (int i = 0; i < 3; ++i) {
    const auto sub = split.sub(i);
    const double w0 = 2.0 * triangle_area(sub[0], sub[1], sub[2]);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const Vec2 p = l[0] * sub[0] + l[1] * sub[1] + l[2] * sub[2];
      const Vec2 fp = f(p);
      const Eigen::Vector3d lam = frame.lambda(p);
      b += (w0 * rule.weights[q]) * lam * fp.transpose();
    }
  }
  const Eigen::Matrix<double, 3, 2> c = M.ldlt().solve(b);
  Eigen::Matrix<double, 6, 1> out;
  for (int i = 0; i < 3; ++i)
    for (int comp = 0; comp < 2; ++comp) out[2 * i + comp] = c(i, comp);
  return out;
}

Eigen::VectorXd project_displacement_p1(const MacroMesh& mesh, const VectorField& f, int order) {
  Eigen::VectorXd out(6 * mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t)
    out.segment<6>(6 * t) = project_p1_local(mesh, t, f, order);
  return out;
}

Eigen::Matrix3d submean_matrix() {
  Eigen::Matrix3d m;
  m << 1, 4, 4, 4, 1, 4, 4, 4, 1;
  return m / 9.0;
}

Eigen::Matrix3d submean_matrix_inverse() {
  // (4/3) * ones - 3 * I inverts the average matrix exactly.
  return Eigen::Matrix3d::Constant(4.0 / 3.0) - 3.0 * Eigen::Matrix3d::Identity();
}

namespace {

// Averages of f over the three sub-triangles, one row per sub-triangle.
Eigen::Matrix<double, 3, 2> submean_values(const MacroMesh& mesh, int t, const VectorField& f,
                                           int order) {
  const MacroSplit split = barycentric_split(mesh, t);
  const auto& rule = make_quadrature(order);
  Eigen::Matrix<double, 3, 2> means = Eigen::Matrix<double, 3, 2>::Zero();
  for (int i = 0; i < 3; ++i) {
    const auto sub = split.sub(i);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const Vec2 p = l[0] * sub[0] + l[1] * sub[1] + l[2] * sub[2];
      const Vec2 fp = f(p);
      // Reference weights sum to 1/2, so 2*sum(w f) is the average over K_i.
      means(i, 0) += 2.0 * rule.weights[q] * fp.x();
      means(i, 1) += 2.0 * rule.weights[q] * fp.y();
    }
  }
  return means;
}

}  // namespace

Eigen::Matrix<double, 6, 1> project_p1_submean_local(const MacroMesh& mesh, int t,
                                                     const VectorField& f, int order) {
  const Eigen::Matrix<double, 3, 2> means = submean_values(mesh, t, f, order);
  const Eigen::Matrix<double, 3, 2> nodal = submean_matrix_inverse() * means;
  Eigen::Matrix<double, 6, 1> out;
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 2; ++c) out[2 * i + c] = nodal(i, c);
  return out;
}

Eigen::VectorXd project_displacement_submean(const MacroMesh& mesh, const VectorField& f,
                                             int order) {
  Eigen::VectorXd out(6 * mesh.num_triangles());
  for (int t = 0; t < mesh.num_triangles(); ++t)
    out.segment<6>(6 * t) = project_p1_submean_local(mesh, t, f, order);
  return out;
}

std::array<Vec2, 3> project_load_submean(const MacroMesh& mesh, int t, const VectorField& f,
                                         int order) {
  // Moments against the barycentric functions per component; the constant
  // values d_i on the sub-triangles satisfy
  //   sum_i d_i int_{K_i} lambda_j = (f, lambda_j)_K,
  // and int_{K_i} lambda_j = (|K|/3) * submean_matrix()(i, j).
  const MacroSplit split = barycentric_split(mesh, t);
  const P1Frame frame(split.vertex);
  const auto& rule = make_quadrature(order);
  Eigen::Matrix<double, 3, 2> moments = Eigen::Matrix<double, 3, 2>::Zero();
  for (int i = 0; i < 3; ++i) {
    const auto sub = split.sub(i);
    const double jac = 2.0 * triangle_area(sub[0], sub[1], sub[2]);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const Vec2 p = l[0] * sub[0] + l[1] * sub[1] + l[2] * sub[2];
      const Vec2 fp = f(p);
      const Eigen::Vector3d lam = frame.lambda(p);
      for (int j = 0; j < 3; ++j) {
        moments(j, 0) += jac * rule.weights[q] * lam[j] * fp.x();
        moments(j, 1) += jac * rule.weights[q] * lam[j] * fp.y();
      }
    }
  }
  const double scale = 3.0 / frame.area;
  const Eigen::Matrix<double, 3, 2> d =
      scale * (submean_matrix().transpose().inverse() * moments);
  return {Vec2(d(0, 0), d(0, 1)), Vec2(d(1, 0), d(1, 1)), Vec2(d(2, 0), d(2, 1))};
}

Eigen::Vector4d edge_traction_moments(const Vec2& A, const Vec2& B, const VectorField& g,
                                      int npoints) {
  const auto& rule = make_edge_quadrature(npoints);
  Eigen::Vector4d m = Eigen::Vector4d::Zero();
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    const double s = rule.points[q];
    const Vec2 gp = g(A + s * (B - A));
    const double lin = 2.0 * s - 1.0;
    m[0] += rule.weights[q] * gp.x();
    m[1] += rule.weights[q] * gp.y();
    m[2] += rule.weights[q] * gp.x() * lin;
    m[3] += rule.weights[q] * gp.y() * lin;
  }
  return m;
}

Vec2 edge_projection_value(const Eigen::Vector4d& m, double s) {
  // With q = 2s-1: (1/L) int q = 0 and (1/L) int q^2 = 1/3, so the projection
  // onto span{1, q} per component reads m_const + 3 m_lin q.
  const double q = 2.0 * s - 1.0;
  return {m[0] + 3.0 * m[2] * q, m[1] + 3.0 * m[3] * q};
}

}  // namespace jmfem
