#include "jmfem/mesh_generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace jmfem {

MacroMesh generate_unit_square(int n, BoundaryTag left_tag, BoundaryTag other_tag) {
  if (n < 1) throw std::invalid_argument("generate_unit_square: n must be >= 1");
  std::vector<Vec2> vertices;
  vertices.reserve((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      vertices.emplace_back(double(i) / n, double(j) / n);
  auto id = [&](int i, int j) { return j * (n + 1) + i; };

  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(2 * n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int p00 = id(i, j), p10 = id(i + 1, j), p11 = id(i + 1, j + 1), p01 = id(i, j + 1);
      triangles.push_back({p00, p10, p11});
      triangles.push_back({p00, p11, p01});
    }

  std::vector<std::pair<std::array<int, 2>, BoundaryTag>> boundary;
  for (int i = 0; i < n; ++i) {
    boundary.push_back({{id(i, 0), id(i + 1, 0)}, other_tag});
    boundary.push_back({{id(i, n), id(i + 1, n)}, other_tag});
  }
  for (int j = 0; j < n; ++j) {
    boundary.push_back({{id(0, j), id(0, j + 1)}, left_tag});
    boundary.push_back({{id(n, j), id(n, j + 1)}, other_tag});
  }
  return MacroMesh(std::move(vertices), std::move(triangles), std::move(boundary));
}

MacroMesh generate_lshape(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("generate_lshape: a must be positive");
  const double s = a / std::sqrt(2.0);
  const double d = std::sqrt(2.0) * a;
  // Hexagon boundary of { |x|+|y| <= sqrt(2)a } \ { |x-s|+|y| <= s },
  // counterclockwise, with the reentrant corner at the origin.
  const Vec2 O(0.0, 0.0), U(s, s), T(0.0, d), L(-d, 0.0), B(0.0, -d), W(s, -s);
  std::vector<Vec2> vertices{O, U, T, L, B, W};
  std::vector<std::array<int, 3>> triangles{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}};
  std::vector<std::pair<std::array<int, 2>, BoundaryTag>> boundary;
  const int loop[6] = {1, 2, 3, 4, 5, 0};  // U T L B W O
  for (int k = 0; k < 6; ++k)
    boundary.push_back({{loop[k], loop[(k + 1) % 6]}, BoundaryTag::TractionN});
  return MacroMesh(std::move(vertices), std::move(triangles), std::move(boundary));
}

MacroMesh generate_plate_with_hole(double a, double b, double w, int segments) {
  if (!(a > 0.0) || !(a < std::min(b, w)))
    throw std::invalid_argument("generate_plate_with_hole: need 0 < a < min(b, w)");
  if (segments < 8) throw std::invalid_argument("generate_plate_with_hole: segments must be >= 8");

  // Angle set: the requested uniform set plus the four rectangle corner
  // directions, so the outer ring reproduces the rectangle exactly.
  std::vector<double> angles;
  for (int k = 0; k < segments; ++k) angles.push_back(2.0 * M_PI * k / segments);
  const double ca = std::atan2(w, b);
  for (double extra : {ca, M_PI - ca, M_PI + ca, 2.0 * M_PI - ca}) {
    bool dup = false;
    for (double t : angles)
      if (std::abs(t - extra) < 1e-12) dup = true;
    if (!dup) angles.push_back(extra);
  }
  std::sort(angles.begin(), angles.end());
  const int na = static_cast<int>(angles.size());

  // Distance from the origin to the rectangle boundary along direction t.
  auto outer_radius = [&](double t) {
    const double cx = std::abs(std::cos(t)), sy = std::abs(std::sin(t));
    double r = std::numeric_limits<double>::max();
    if (cx > 1e-15) r = std::min(r, b / cx);
    if (sy > 1e-15) r = std::min(r, w / sy);
    return r;
  };

  const double hole_h = 2.0 * M_PI * a / segments;
  const double rmin = std::min(b, w);
  const int layers = std::max(2, static_cast<int>(std::lround((rmin - a) / hole_h)));

  std::vector<Vec2> vertices;
  auto vid = [&](int j, int k) { return j * na + k; };
  for (int j = 0; j <= layers; ++j)
    for (int k = 0; k < na; ++k) {
      const double t = angles[k];
      const double r = a + (outer_radius(t) - a) * (double(j) / layers);
      vertices.emplace_back(r * std::cos(t), r * std::sin(t));
    }
  // Snap the hole ring onto the circle exactly.
  for (int k = 0; k < na; ++k)
    vertices[vid(0, k)] = a * Vec2(std::cos(angles[k]), std::sin(angles[k]));

  std::vector<std::array<int, 3>> triangles;
  for (int j = 0; j < layers; ++j)
    for (int k = 0; k < na; ++k) {
      const int k1 = (k + 1) % na;
      const int A = vid(j, k), B = vid(j, k1), C = vid(j + 1, k1), D = vid(j + 1, k);
      triangles.push_back({A, B, C});
      triangles.push_back({A, C, D});
    }

  std::vector<std::pair<std::array<int, 2>, BoundaryTag>> boundary;
  for (int k = 0; k < na; ++k) {
    const int k1 = (k + 1) % na;
    boundary.push_back({{vid(0, k), vid(0, k1)}, BoundaryTag::TractionN});
    boundary.push_back({{vid(layers, k), vid(layers, k1)}, BoundaryTag::TractionN});
  }
  return MacroMesh(std::move(vertices), std::move(triangles), std::move(boundary));
}

}  // namespace jmfem
